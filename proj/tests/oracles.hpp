#pragma once

// Test-only reference computations. Nothing here goes through the library's
// influence matrix, quadratic forms or Cholesky path: equilibria come from a
// plain Gauss-Jordan solve of (I + L) z = s assembled straight from the edge
// list, and objectives are re-derived from their definitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "disrupt/generators.hpp"
#include "disrupt/graph.hpp"
#include "disrupt/objectives.hpp"

namespace oracle {

using disrupt::Index;
using Dense = std::vector<std::vector<double>>;

inline Dense system_matrix(const disrupt::WeightedGraph& g) {
  const Index n = g.num_nodes();
  Dense a(n, std::vector<double>(n, 0.0));
  for (Index i = 0; i < n; ++i) a[i][i] = 1.0;
  for (const auto& e : g.edges()) {
    a[e.u][e.u] += e.w;
    a[e.v][e.v] += e.w;
    a[e.u][e.v] -= e.w;
    a[e.v][e.u] -= e.w;
  }
  return a;
}

// Gauss-Jordan with partial pivoting.
inline std::vector<double> solve(Dense a, std::vector<double> b) {
  const Index n = b.size();
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    for (Index r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (Index c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (Index i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Doolittle LU with partial pivoting, factored once and reused for many
// right-hand sides.
class LuSolver {
 public:
  explicit LuSolver(Dense a) : lu_(std::move(a)), perm_(lu_.size()) {
    const Index n = lu_.size();
    for (Index i = 0; i < n; ++i) perm_[i] = i;
    for (Index col = 0; col < n; ++col) {
      Index pivot = col;
      for (Index r = col + 1; r < n; ++r) {
        if (std::abs(lu_[r][col]) > std::abs(lu_[pivot][col])) pivot = r;
      }
      std::swap(lu_[col], lu_[pivot]);
      std::swap(perm_[col], perm_[pivot]);
      for (Index r = col + 1; r < n; ++r) {
        lu_[r][col] /= lu_[col][col];
        for (Index c = col + 1; c < n; ++c) lu_[r][c] -= lu_[r][col] * lu_[col][c];
      }
    }
  }

  std::vector<double> solve(const std::vector<double>& b) const {
    const Index n = lu_.size();
    std::vector<double> y(n);
    for (Index i = 0; i < n; ++i) {
      double acc = b[perm_[i]];
      for (Index c = 0; c < i; ++c) acc -= lu_[i][c] * y[c];
      y[i] = acc;
    }
    for (Index i = n; i-- > 0;) {
      double acc = y[i];
      for (Index c = i + 1; c < n; ++c) acc -= lu_[i][c] * y[c];
      y[i] = acc / lu_[i][i];
    }
    return y;
  }

 private:
  Dense lu_;
  std::vector<Index> perm_;
};

inline std::vector<double> to_std(const disrupt::OpinionVector& v) {
  return {v.begin(), v.end()};
}

inline std::vector<double> equilibrium(const disrupt::WeightedGraph& g,
                                       const std::vector<double>& s) {
  return solve(system_matrix(g), s);
}

inline double disagreement(const disrupt::WeightedGraph& g, const std::vector<double>& z) {
  double total = 0.0;
  for (const auto& e : g.edges()) total += e.w * (z[e.u] - z[e.v]) * (z[e.u] - z[e.v]);
  return total;
}

inline double polarization(const std::vector<double>& z) {
  double mean = 0.0;
  for (double x : z) mean += x;
  mean /= static_cast<double>(z.size());
  double total = 0.0;
  for (double x : z) total += (x - mean) * (x - mean);
  return total;
}

inline double objective(const disrupt::WeightedGraph& g, const std::vector<double>& s,
                        disrupt::ObjectiveKind kind, double lambda = 1.0) {
  const auto z = equilibrium(g, s);
  switch (kind) {
    case disrupt::ObjectiveKind::Disagreement: return disagreement(g, z);
    case disrupt::ObjectiveKind::Polarization: return polarization(z);
    case disrupt::ObjectiveKind::WeightedSum:
      return polarization(z) + lambda * static_cast<double>(g.num_nodes()) /
                                   static_cast<double>(g.num_edges()) *
                                   disagreement(g, z);
  }
  return 0.0;
}

struct SlowStep {
  Index node;
  double opinion;
  double value;
};

// Greedy with every candidate scored by a fresh equilibrium solve.
inline std::vector<SlowStep> slow_greedy(const disrupt::WeightedGraph& g,
                                         std::vector<double> s, Index k,
                                         disrupt::ObjectiveKind kind,
                                         double lambda = 1.0) {
  const LuSolver lu(system_matrix(g));
  auto score = [&](const std::vector<double>& x) {
    const auto z = lu.solve(x);
    switch (kind) {
      case disrupt::ObjectiveKind::Disagreement: return disagreement(g, z);
      case disrupt::ObjectiveKind::Polarization: return polarization(z);
      default:
        return polarization(z) + lambda * static_cast<double>(g.num_nodes()) /
                                     static_cast<double>(g.num_edges()) *
                                     disagreement(g, z);
    }
  };
  std::vector<SlowStep> steps;
  std::vector<bool> taken(s.size(), false);
  double current = score(s);
  for (Index it = 0; it < k; ++it) {
    SlowStep best{s.size(), 0.0, -1e300};
    for (Index j = 0; j < s.size(); ++j) {
      if (taken[j]) continue;
      for (double opinion : {0.0, 1.0}) {
        auto trial = s;
        trial[j] = opinion;
        const double value = score(trial);
        // Same tie rule as the library: near-equal scores keep the earlier pick.
        const double scale = std::max({1.0, std::abs(value), std::abs(best.value)});
        if (best.node == s.size() || value > best.value + 1e-12 * scale) {
          best = {j, opinion, value};
        }
      }
    }
    if (best.value < current) break;
    s[best.node] = best.opinion;
    taken[best.node] = true;
    current = best.value;
    steps.push_back(best);
  }
  return steps;
}

// Best objective over all sets of at most k nodes set to extremes, by plain
// recursion and fresh solves.
inline double naive_optimum(const disrupt::WeightedGraph& g, const std::vector<double>& s,
                            Index k, disrupt::ObjectiveKind kind, double lambda = 1.0) {
  double best = objective(g, s, kind, lambda);
  std::vector<double> work = s;
  std::function<void(Index, Index)> rec = [&](Index start, Index left) {
    if (left == 0) return;
    for (Index j = start; j < s.size(); ++j) {
      for (double opinion : {0.0, 1.0}) {
        work[j] = opinion;
        best = std::max(best, objective(g, work, kind, lambda));
        rec(j + 1, left - 1);
      }
      work[j] = s[j];
    }
  };
  rec(0, k);
  return best;
}

// Erdos-Renyi graph redrawn until no node is isolated.
inline disrupt::WeightedGraph connected_er(Index n, double p, disrupt::CounterRng& rng) {
  while (true) {
    auto g = disrupt::erdos_renyi(n, p, rng);
    if (!g.has_isolated_nodes()) return g;
  }
}

inline disrupt::WeightedGraph single_edge(double w = 1.0) {
  const disrupt::Edge edges[] = {{0, 1, w}};
  return disrupt::WeightedGraph(2, edges);
}

inline disrupt::OpinionVector vec(std::initializer_list<double> values) {
  disrupt::OpinionVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace oracle
