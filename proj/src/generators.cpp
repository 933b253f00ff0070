#include "disrupt/generators.hpp"

#include <random>
#include <stdexcept>

namespace disrupt {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(p) +
                                " outside [0, 1]");
  }
}

}  // namespace

WeightedGraph erdos_renyi(Index n, double p, CounterRng& rng) {
  require_probability(p, "erdos_renyi: p");
  std::vector<Edge> edges;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v, rng.uniform_open01()});
    }
  }
  return WeightedGraph(n, edges);
}

WeightedGraph preferential_attachment(Index n, Index m_attach, CounterRng& rng) {
  if (m_attach < 1) throw std::invalid_argument("preferential_attachment: m_attach < 1");
  if (n <= m_attach) {
    throw std::invalid_argument("preferential_attachment: need n > m_attach");
  }
  std::vector<Edge> edges;
  // One entry per edge endpoint, so a uniform draw is degree-proportional.
  std::vector<Index> endpoints;
  const Index seed_size = m_attach + 1;
  for (Index u = 0; u < seed_size; ++u) {
    for (Index v = u + 1; v < seed_size; ++v) {
      edges.push_back({u, v, rng.uniform_open01()});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Index> targets;
  std::vector<bool> chosen(n, false);
  for (Index v = seed_size; v < n; ++v) {
    targets.clear();
    while (targets.size() < m_attach) {
      const Index t = endpoints[rng.below(endpoints.size())];
      if (chosen[t]) continue;
      chosen[t] = true;
      targets.push_back(t);
    }
    for (Index t : targets) {
      chosen[t] = false;
      edges.push_back({t, v, rng.uniform_open01()});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return WeightedGraph(n, edges);
}

BlockGraph stochastic_block(Index n, double p11, double p22, double p12,
                            CounterRng& rng) {
  require_probability(p11, "stochastic_block: p11");
  require_probability(p22, "stochastic_block: p22");
  require_probability(p12, "stochastic_block: p12");
  if (n % 2 != 0) {
    throw std::invalid_argument("stochastic_block: n = " + std::to_string(n) +
                                " must be even");
  }
  BlockGraph out;
  out.community.resize(n);
  for (Index v = 0; v < n; ++v) out.community[v] = v < n / 2 ? 0 : 1;
  std::vector<Edge> edges;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      const int cu = out.community[u];
      const int cv = out.community[v];
      const double p = cu != cv ? p12 : (cu == 0 ? p11 : p22);
      if (rng.bernoulli(p)) edges.push_back({u, v, rng.uniform_open01()});
    }
  }
  out.graph = WeightedGraph(n, edges);
  return out;
}

OpinionVector opinions_uniform(Index n, CounterRng& rng) {
  OpinionVector s(static_cast<Eigen::Index>(n));
  for (auto& x : s) x = rng.uniform();
  return s;
}

double sample_beta(double alpha, double beta, CounterRng& rng) {
  if (!(alpha > 0.0 && beta > 0.0)) {
    throw std::invalid_argument("sample_beta: shape parameters must be > 0");
  }
  std::gamma_distribution<double> ga(alpha, 1.0);
  std::gamma_distribution<double> gb(beta, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return x / (x + y);
}

OpinionVector opinions_beta_communities(const std::vector<int>& community,
                                        double alpha1, double beta1,
                                        double alpha2, double beta2,
                                        CounterRng& rng) {
  OpinionVector s(static_cast<Eigen::Index>(community.size()));
  for (Index v = 0; v < community.size(); ++v) {
    s[static_cast<Eigen::Index>(v)] = community[v] == 0
                                          ? sample_beta(alpha1, beta1, rng)
                                          : sample_beta(alpha2, beta2, rng);
  }
  return s;
}

std::string to_string(GraphModel model) {
  switch (model) {
    case GraphModel::ErdosRenyi: return "er";
    case GraphModel::PreferentialAttachment: return "pa";
    case GraphModel::StochasticBlock: return "sbm";
  }
  return "unknown";
}

GraphModel parse_graph_model(const std::string& name) {
  if (name == "er") return GraphModel::ErdosRenyi;
  if (name == "pa") return GraphModel::PreferentialAttachment;
  if (name == "sbm") return GraphModel::StochasticBlock;
  throw std::invalid_argument("unknown graph model '" + name + "' (expected er|pa|sbm)");
}

std::string to_string(OpinionModel model) {
  return model == OpinionModel::Uniform ? "uniform" : "beta";
}

OpinionModel parse_opinion_model(const std::string& name) {
  if (name == "uniform") return OpinionModel::Uniform;
  if (name == "beta") return OpinionModel::BetaCommunities;
  throw std::invalid_argument("unknown opinion model '" + name + "' (expected uniform|beta)");
}

Instance generate(const GeneratorConfig& config) {
  const CounterRng root(config.seed);
  CounterRng graph_rng = root.split(0);
  CounterRng opinion_rng = root.split(1);
  Instance out;
  switch (config.model) {
    case GraphModel::ErdosRenyi:
      out.graph = erdos_renyi(config.n, config.p, graph_rng);
      break;
    case GraphModel::PreferentialAttachment:
      out.graph = preferential_attachment(config.n, config.m_attach, graph_rng);
      break;
    case GraphModel::StochasticBlock: {
      auto block = stochastic_block(config.n, config.p11, config.p22, config.p12,
                                    graph_rng);
      out.graph = std::move(block.graph);
      out.community = std::move(block.community);
      break;
    }
  }
  if (config.opinions == OpinionModel::Uniform) {
    out.opinions = opinions_uniform(config.n, opinion_rng);
  } else {
    if (out.community.empty()) {
      throw std::invalid_argument("beta opinions need the sbm graph model");
    }
    out.opinions = opinions_beta_communities(out.community, config.alpha1,
                                             config.beta1, config.alpha2,
                                             config.beta2, opinion_rng);
  }
  return out;
}

}  // namespace disrupt
