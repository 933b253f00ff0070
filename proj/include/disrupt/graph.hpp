#pragma once

#include <span>
#include <vector>

#include "disrupt/types.hpp"

namespace disrupt {

struct Edge {
  Index u;
  Index v;
  Scalar w;

  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  Index node;
  Scalar w;
};

struct DegreeProfile {
  std::vector<Scalar> weighted;
  std::vector<Index> unweighted;
  Scalar max_weighted = 0.0;
};

// Undirected graph on dense ids [0, n) with edge weights in (0, 1].
// Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Validates ids, weights, self-loops and duplicate pairs; throws
  // std::invalid_argument on the first violation.
  WeightedGraph(Index n, std::span<const Edge> edges);

  Index num_nodes() const { return n_; }
  Index num_edges() const { return edges_.size(); }

  // Edges in insertion order, normalized so that u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of v sorted by id.
  std::span<const Neighbor> neighbors(Index v) const { return adjacency_[v]; }

  Scalar weight(Index u, Index v) const;
  Scalar weighted_degree(Index v) const { return weighted_degree_[v]; }
  Index unweighted_degree(Index v) const { return adjacency_[v].size(); }
  bool has_isolated_nodes() const;

 private:
  Index n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Scalar> weighted_degree_;
};

WeightedGraph build_graph(Index n, std::span<const Edge> edges);

// Dense L = D - A.
Matrix laplacian(const WeightedGraph& g);

DegreeProfile degrees(const WeightedGraph& g);

struct ReducedInstance {
  WeightedGraph graph;
  OpinionVector opinions;
  // kept[new_id] = old_id
  std::vector<Index> kept;
};

// Drops zero-degree nodes and restricts s accordingly. Throws
// std::invalid_argument if s has the wrong length or if no node survives.
ReducedInstance remove_isolated(const WeightedGraph& g, const OpinionVector& s);

}  // namespace disrupt
