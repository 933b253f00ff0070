#pragma once

#include <string>
#include <vector>

#include "disrupt/graph.hpp"
#include "disrupt/rng.hpp"

namespace disrupt {

// Every generated edge gets a weight drawn uniformly from (0, 1].

// Each unordered pair independently with probability p.
WeightedGraph erdos_renyi(Index n, double p, CounterRng& rng);

// Starts from a complete graph on m_attach + 1 nodes; every later node links
// to m_attach distinct existing nodes drawn proportionally to their current
// (unweighted) degree, without replacement. Requires n > m_attach >= 1.
WeightedGraph preferential_attachment(Index n, Index m_attach, CounterRng& rng);

struct BlockGraph {
  WeightedGraph graph;
  // 0 for the first n/2 nodes, 1 for the rest.
  std::vector<int> community;
};

// Two equal communities; pairs inside community 1 connect with p11, inside
// community 2 with p22, across with p12. n must be even.
BlockGraph stochastic_block(Index n, double p11, double p22, double p12,
                            CounterRng& rng);

OpinionVector opinions_uniform(Index n, CounterRng& rng);

// Beta(alpha1, beta1) draws for community 0, Beta(alpha2, beta2) for 1.
OpinionVector opinions_beta_communities(const std::vector<int>& community,
                                        double alpha1, double beta1,
                                        double alpha2, double beta2,
                                        CounterRng& rng);

double sample_beta(double alpha, double beta, CounterRng& rng);

enum class GraphModel { ErdosRenyi, PreferentialAttachment, StochasticBlock };
enum class OpinionModel { Uniform, BetaCommunities };

std::string to_string(GraphModel model);
GraphModel parse_graph_model(const std::string& name);
std::string to_string(OpinionModel model);
OpinionModel parse_opinion_model(const std::string& name);

struct GeneratorConfig {
  GraphModel model = GraphModel::ErdosRenyi;
  Index n = 1000;
  double p = 0.2;
  Index m_attach = 5;
  double p11 = 0.7;
  double p22 = 0.7;
  double p12 = 0.1;
  OpinionModel opinions = OpinionModel::Uniform;
  double alpha1 = 5.0;
  double beta1 = 2.0;
  double alpha2 = 2.0;
  double beta2 = 5.0;
  std::uint64_t seed = 0;
};

struct Instance {
  WeightedGraph graph;
  OpinionVector opinions;
  std::vector<int> community;  // empty unless generated by the block model
};

// Graph from rng.split(0) of the seed, opinions from split(1). Beta opinions
// need community labels, so they require the block model.
Instance generate(const GeneratorConfig& config);

}  // namespace disrupt
