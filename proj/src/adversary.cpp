#include "disrupt/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace disrupt {

std::string_view to_string(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::Greedy: return "greedy";
    case HeuristicKind::MeanOpinion: return "mean-opinion";
    case HeuristicKind::MeanOpinionRandomized: return "mean-opinion-randomized";
    case HeuristicKind::MaxDegree: return "max-degree";
    case HeuristicKind::MaxWeightedDegree: return "max-weighted-degree";
    case HeuristicKind::Random: return "random";
  }
  return "unknown";
}

HeuristicKind parse_heuristic(std::string_view name) {
  for (HeuristicKind kind : kAllHeuristics) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown heuristic '" + std::string(name) + "'");
}

std::string_view to_string(MeanOpinionRule rule) {
  return rule == MeanOpinionRule::Closest ? "closest" : "farthest";
}

MeanOpinionRule parse_mean_opinion_rule(std::string_view name) {
  if (name == "closest") return MeanOpinionRule::Closest;
  if (name == "farthest") return MeanOpinionRule::Farthest;
  throw std::invalid_argument("unknown mean-opinion rule '" + std::string(name) +
                              "' (expected closest|farthest)");
}

namespace {

// Candidate scores that agree to ~1e-12 relative are treated as ties so that
// the lowest-index / opinion-0 preference survives rounding noise.
bool clearly_greater(Scalar candidate, Scalar incumbent) {
  const Scalar scale = std::max({Scalar{1}, std::abs(candidate), std::abs(incumbent)});
  return candidate > incumbent + 1e-12 * scale;
}

void validate_instance(const InfluenceMatrix& inf, const WeightedGraph& g,
                       const OpinionVector& s, Index k) {
  if (inf.size() != g.num_nodes() ||
      static_cast<Index>(s.size()) != g.num_nodes()) {
    throw std::invalid_argument("adversary: graph, influence matrix and opinion "
                                "vector sizes disagree");
  }
  if (k > g.num_nodes()) {
    throw std::invalid_argument("adversary: budget k = " + std::to_string(k) +
                                " exceeds node count " +
                                std::to_string(g.num_nodes()));
  }
  require_opinion_range(s, "innate opinions");
}

// Incremental state shared by every heuristic: the modified innate vector,
// the cached gradient A s' and the current objective value.
class PlanState {
 public:
  PlanState(const InfluenceMatrix& inf, const OpinionVector& s, Index k,
            std::optional<HeuristicKind> kind, const ObjectiveSpec& spec)
      : objective_(inf, spec), taken_(s.size(), false) {
    plan_.heuristic = kind;
    plan_.objective = spec;
    plan_.budget = k;
    plan_.original = s;
    plan_.modified = s;
    gradient_ = objective_.gradient(s);
    value_ = plan_.modified.dot(gradient_);
    plan_.trajectory.push_back(value_);
  }

  const OpinionVector& current() const { return plan_.modified; }
  bool taken(Index j) const { return taken_[j]; }
  Scalar value() const { return value_; }

  Scalar gain(Index j, Scalar a) const {
    return objective_.gain(gradient_, j, a - plan_.modified[static_cast<Eigen::Index>(j)]);
  }

  // Better extreme for node j; 0 on ties.
  Scalar best_extreme(Index j) const {
    return clearly_greater(value_ + gain(j, 1.0), value_ + gain(j, 0.0)) ? 1.0 : 0.0;
  }

  void commit(Index j, Scalar a) {
    const Scalar delta = a - plan_.modified[static_cast<Eigen::Index>(j)];
    if (delta != 0.0) {
      objective_.update_gradient(gradient_, j, delta);
      plan_.modified[static_cast<Eigen::Index>(j)] = a;
      value_ = plan_.modified.dot(gradient_);
    }
    taken_[j] = true;
    plan_.takeovers.push_back({j, a});
    plan_.trajectory.push_back(value_);
  }

  DisruptionPlan finish(bool stopped_early = false) {
    plan_.stopped_early = stopped_early;
    return std::move(plan_);
  }

 private:
  QuadraticObjective objective_;
  DisruptionPlan plan_;
  Vector gradient_;
  Scalar value_ = 0.0;
  std::vector<bool> taken_;
};

}  // namespace

DisruptionPlan greedy(const InfluenceMatrix& inf, const WeightedGraph& g,
                      const OpinionVector& s, Index k, const ObjectiveSpec& spec) {
  validate_instance(inf, g, s, k);
  if (g.has_isolated_nodes()) {
    throw std::invalid_argument("greedy: graph has isolated nodes; remove them first");
  }
  PlanState state(inf, s, k, HeuristicKind::Greedy, spec);
  const Index n = g.num_nodes();
  for (Index step = 0; step < k; ++step) {
    Index best_node = n;
    Scalar best_opinion = 0.0;
    Scalar best_gain = -std::numeric_limits<Scalar>::infinity();
    for (Index j = 0; j < n; ++j) {
      if (state.taken(j)) continue;
      for (Scalar a : {0.0, 1.0}) {
        const Scalar gain = state.gain(j, a);
        if (best_node == n || clearly_greater(state.value() + gain, state.value() + best_gain)) {
          best_gain = gain;
          best_node = j;
          best_opinion = a;
        }
      }
    }
    // Accept unless the best value is strictly below the current one.
    if (state.value() + best_gain < state.value()) return state.finish(/*stopped_early=*/true);
    state.commit(best_node, best_opinion);
  }
  return state.finish();
}

DisruptionPlan mean_opinion(const InfluenceMatrix& inf, const WeightedGraph& g,
                            const OpinionVector& s, Index k,
                            const ObjectiveSpec& spec, bool randomized,
                            CounterRng* rng, MeanOpinionRule rule) {
  validate_instance(inf, g, s, k);
  if (randomized && rng == nullptr) {
    throw std::invalid_argument("mean_opinion: randomized variant needs an rng");
  }
  PlanState state(inf, s, k,
                  randomized ? HeuristicKind::MeanOpinionRandomized
                             : HeuristicKind::MeanOpinion,
                  spec);
  const Index n = g.num_nodes();
  for (Index step = 0; step < k; ++step) {
    const Scalar mean = state.current().mean();
    Index pick = n;
    Scalar pick_distance = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (state.taken(j)) continue;
      const Scalar distance = std::abs(state.current()[static_cast<Eigen::Index>(j)] - mean);
      const bool better = rule == MeanOpinionRule::Closest ? distance < pick_distance
                                                           : distance > pick_distance;
      if (pick == n || better) {
        pick = j;
        pick_distance = distance;
      }
    }
    const Scalar a = randomized ? (rng->coin() ? 1.0 : 0.0) : state.best_extreme(pick);
    state.commit(pick, a);
  }
  return state.finish();
}

DisruptionPlan max_degree(const InfluenceMatrix& inf, const WeightedGraph& g,
                          const OpinionVector& s, Index k,
                          const ObjectiveSpec& spec, bool weighted) {
  validate_instance(inf, g, s, k);
  PlanState state(inf, s, k,
                  weighted ? HeuristicKind::MaxWeightedDegree : HeuristicKind::MaxDegree,
                  spec);
  // Degrees never change, so the pick order is a stable sort by degree.
  std::vector<Index> order(g.num_nodes());
  std::iota(order.begin(), order.end(), Index{0});
  auto degree = [&](Index v) {
    return weighted ? g.weighted_degree(v) : static_cast<Scalar>(g.unweighted_degree(v));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return degree(a) > degree(b); });
  for (Index step = 0; step < k; ++step) {
    const Index pick = order[step];
    state.commit(pick, state.best_extreme(pick));
  }
  return state.finish();
}

DisruptionPlan random_heuristic(const InfluenceMatrix& inf,
                                const WeightedGraph& g, const OpinionVector& s,
                                Index k, const ObjectiveSpec& spec,
                                CounterRng& rng) {
  validate_instance(inf, g, s, k);
  PlanState state(inf, s, k, HeuristicKind::Random, spec);
  std::vector<Index> remaining(g.num_nodes());
  std::iota(remaining.begin(), remaining.end(), Index{0});
  for (Index step = 0; step < k; ++step) {
    const auto r = static_cast<Index>(rng.below(remaining.size()));
    const Index pick = remaining[r];
    remaining[r] = remaining.back();
    remaining.pop_back();
    state.commit(pick, rng.coin() ? 1.0 : 0.0);
  }
  return state.finish();
}

std::uint64_t brute_force_size(Index n, Index k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t choose = 1;  // C(n, i)
  std::uint64_t pow2 = 1;    // 2^i
  for (Index i = 0; i <= std::min(k, n); ++i) {
    if (i > 0) {
      // C(n, i) = C(n, i - 1) * (n - i + 1) / i, exact in 128-bit.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(choose) * (n - i + 1) / i;
      if (next > kMax || pow2 > kMax / 2) return kMax;
      choose = static_cast<std::uint64_t>(next);
      pow2 *= 2;
    }
    const unsigned __int128 term = static_cast<unsigned __int128>(choose) * pow2;
    if (term > kMax - total) return kMax;
    total += static_cast<std::uint64_t>(term);
  }
  return total;
}

DisruptionPlan brute_force_optimal(const InfluenceMatrix& inf,
                                   const WeightedGraph& g,
                                   const OpinionVector& s, Index k,
                                   const ObjectiveSpec& spec) {
  validate_instance(inf, g, s, k);
  const Index n = g.num_nodes();
  const std::uint64_t size = brute_force_size(n, k);
  if (size > kBruteForceLimit) {
    throw std::invalid_argument("brute_force_optimal: " + std::to_string(size) +
                                " candidate plans exceed the limit of " +
                                std::to_string(kBruteForceLimit));
  }

  const QuadraticObjective objective(inf, spec);
  const Vector gradient = objective.gradient(s);
  const Scalar base = s.dot(gradient);

  // f(s + d) = f(s) + 2 d.g + d^T A d with d supported on the chosen subset.
  Scalar best_value = base;
  std::vector<Takeover> best;
  std::vector<Index> subset;
  std::vector<Scalar> delta;
  for (Index size_k = 1; size_k <= k; ++size_k) {
    subset.resize(size_k);
    delta.resize(size_k);
    std::iota(subset.begin(), subset.end(), Index{0});
    while (true) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size_k); ++mask) {
        // The first node of the subset takes the most significant bit so the
        // masks run through assignments in lexicographic order.
        Scalar value = base;
        for (Index a = 0; a < size_k; ++a) {
          const Scalar opinion = (mask >> (size_k - 1 - a)) & 1U ? 1.0 : 0.0;
          delta[a] = opinion - s[static_cast<Eigen::Index>(subset[a])];
          value += 2.0 * delta[a] * gradient[static_cast<Eigen::Index>(subset[a])];
        }
        for (Index a = 0; a < size_k; ++a) {
          value += delta[a] * delta[a] * objective.diagonal(subset[a]);
          for (Index b = a + 1; b < size_k; ++b) {
            value += 2.0 * delta[a] * delta[b] * objective.entry(subset[a], subset[b]);
          }
        }
        if (clearly_greater(value, best_value)) {
          best_value = value;
          best.clear();
          for (Index a = 0; a < size_k; ++a) {
            best.push_back({subset[a], (mask >> (size_k - 1 - a)) & 1U ? 1.0 : 0.0});
          }
        }
      }
      // Next subset in lexicographic order.
      Index pos = size_k;
      while (pos > 0 && subset[pos - 1] == n - size_k + pos - 1) --pos;
      if (pos == 0) break;
      ++subset[pos - 1];
      for (Index b = pos; b < size_k; ++b) subset[b] = subset[b - 1] + 1;
    }
  }

  PlanState state(inf, s, k, std::nullopt, spec);
  for (const Takeover& t : best) state.commit(t.node, t.opinion);
  return state.finish();
}

DisruptionPlan run_heuristic(HeuristicKind kind, const InfluenceMatrix& inf,
                             const WeightedGraph& g, const OpinionVector& s,
                             Index k, const ObjectiveSpec& spec,
                             const HeuristicOptions& options) {
  CounterRng rng(options.seed);
  switch (kind) {
    case HeuristicKind::Greedy:
      return greedy(inf, g, s, k, spec);
    case HeuristicKind::MeanOpinion:
      return mean_opinion(inf, g, s, k, spec, false, nullptr,
                          options.mean_opinion_rule);
    case HeuristicKind::MeanOpinionRandomized:
      return mean_opinion(inf, g, s, k, spec, true, &rng,
                          options.mean_opinion_rule);
    case HeuristicKind::MaxDegree:
      return max_degree(inf, g, s, k, spec, false);
    case HeuristicKind::MaxWeightedDegree:
      return max_degree(inf, g, s, k, spec, true);
    case HeuristicKind::Random:
      return random_heuristic(inf, g, s, k, spec, rng);
  }
  throw std::invalid_argument("run_heuristic: unknown heuristic");
}

}  // namespace disrupt
