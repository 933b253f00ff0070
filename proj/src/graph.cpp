#include "disrupt/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace disrupt {

void require_opinion_range(const OpinionVector& s, const char* what) {
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s[i] >= 0.0 && s[i] <= 1.0)) {
      throw std::invalid_argument(std::string(what) + ": entry " +
                                  std::to_string(i) + " = " +
                                  std::to_string(s[i]) + " outside [0, 1]");
    }
  }
}

WeightedGraph::WeightedGraph(Index n, std::span<const Edge> edges)
    : n_(n), adjacency_(n), weighted_degree_(n, 0.0) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) +
                                  ") has node id out of range [0, " +
                                  std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
    }
    if (!(e.w > 0.0 && e.w <= 1.0)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") weight " +
                                  std::to_string(e.w) + " outside (0, 1]");
    }
    const Index a = std::min(e.u, e.v);
    const Index b = std::max(e.u, e.v);
    edges_.push_back({a, b, e.w});
    adjacency_[a].push_back({b, e.w});
    adjacency_[b].push_back({a, e.w});
  }
  for (Index v = 0; v < n_; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    for (Index i = 1; i < adj.size(); ++i) {
      if (adj[i].node == adj[i - 1].node) {
        throw std::invalid_argument("duplicate edge (" +
                                    std::to_string(std::min(v, adj[i].node)) +
                                    ", " +
                                    std::to_string(std::max(v, adj[i].node)) +
                                    ")");
      }
    }
    for (const Neighbor& nb : adj) weighted_degree_[v] += nb.w;
  }
}

Scalar WeightedGraph::weight(Index u, Index v) const {
  const auto& adj = adjacency_.at(u);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& nb, Index id) { return nb.node < id; });
  return (it != adj.end() && it->node == v) ? it->w : 0.0;
}

bool WeightedGraph::has_isolated_nodes() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& adj) { return adj.empty(); });
}

WeightedGraph build_graph(Index n, std::span<const Edge> edges) {
  return WeightedGraph(n, edges);
}

Matrix laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Matrix L = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    L(u, v) -= e.w;
    L(v, u) -= e.w;
    L(u, u) += e.w;
    L(v, v) += e.w;
  }
  return L;
}

DegreeProfile degrees(const WeightedGraph& g) {
  DegreeProfile profile;
  profile.weighted.resize(g.num_nodes());
  profile.unweighted.resize(g.num_nodes());
  for (Index v = 0; v < g.num_nodes(); ++v) {
    profile.weighted[v] = g.weighted_degree(v);
    profile.unweighted[v] = g.unweighted_degree(v);
    profile.max_weighted = std::max(profile.max_weighted, profile.weighted[v]);
  }
  return profile;
}

ReducedInstance remove_isolated(const WeightedGraph& g, const OpinionVector& s) {
  if (static_cast<Index>(s.size()) != g.num_nodes()) {
    throw std::invalid_argument("remove_isolated: opinion vector length " +
                                std::to_string(s.size()) + " != node count " +
                                std::to_string(g.num_nodes()));
  }
  ReducedInstance out;
  std::vector<Index> new_id(g.num_nodes(), g.num_nodes());
  for (Index v = 0; v < g.num_nodes(); ++v) {
    if (g.unweighted_degree(v) > 0) {
      new_id[v] = out.kept.size();
      out.kept.push_back(v);
    }
  }
  if (out.kept.empty()) {
    throw std::invalid_argument("remove_isolated: every node is isolated");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({new_id[e.u], new_id[e.v], e.w});
  out.graph = WeightedGraph(out.kept.size(), edges);
  out.opinions.resize(static_cast<Eigen::Index>(out.kept.size()));
  for (Index i = 0; i < out.kept.size(); ++i) {
    out.opinions[static_cast<Eigen::Index>(i)] =
        s[static_cast<Eigen::Index>(out.kept[i])];
  }
  return out;
}

}  // namespace disrupt
