#include "disrupt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace disrupt {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  for (std::string item; std::getline(in, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument(key + ": expected true|false, got '" + value + "'");
}

Index parse_index(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    x = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw std::invalid_argument(key + ": expected a non-negative integer, got '" +
                                value + "'");
  }
  return static_cast<Index>(x);
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    return parse_double(value);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
  }
}

std::string default_graph_id(const SweepConfig& config) {
  if (resolve_source(config) == InstanceSource::Dataset) {
    return std::filesystem::path(config.edges_path).stem().string();
  }
  const GeneratorConfig& g = config.generator;
  std::ostringstream id;
  id << to_string(g.model) << "-n" << g.n;
  switch (g.model) {
    case GraphModel::ErdosRenyi: id << "-p" << g.p; break;
    case GraphModel::PreferentialAttachment: id << "-m" << g.m_attach; break;
    case GraphModel::StochasticBlock:
      id << "-p11_" << g.p11 << "-p22_" << g.p22 << "-p12_" << g.p12;
      break;
  }
  id << '-' << to_string(g.opinions);
  return id.str();
}

// Runs fn(i) for i in [0, count) on up to `threads` workers and rethrows the
// first failure.
template <typename Fn>
void parallel_for(Index count, Index threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (Index t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (Index i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

void apply_config_value(SweepConfig& c, const std::string& key,
                        const std::string& raw) {
  const std::string value = trim(raw);
  GeneratorConfig& g = c.generator;
  if (key == "model") {
    if (value == "dataset") {
      c.source = InstanceSource::Dataset;
    } else {
      c.source = InstanceSource::Generated;
      g.model = parse_graph_model(value);
    }
  } else if (key == "n") {
    g.n = parse_index(key, value);
  } else if (key == "p") {
    g.p = parse_number(key, value);
  } else if (key == "m-attach") {
    g.m_attach = parse_index(key, value);
  } else if (key == "p11") {
    g.p11 = parse_number(key, value);
  } else if (key == "p22") {
    g.p22 = parse_number(key, value);
  } else if (key == "p12") {
    g.p12 = parse_number(key, value);
  } else if (key == "opinions") {
    g.opinions = parse_opinion_model(value);
  } else if (key == "alpha1") {
    g.alpha1 = parse_number(key, value);
  } else if (key == "beta1") {
    g.beta1 = parse_number(key, value);
  } else if (key == "alpha2") {
    g.alpha2 = parse_number(key, value);
  } else if (key == "beta2") {
    g.beta2 = parse_number(key, value);
  } else if (key == "edges") {
    c.edges_path = value;
  } else if (key == "opinions-file") {
    c.opinions_path = value;
  } else if (key == "weighted") {
    c.weighted = parse_bool(key, value);
  } else if (key == "drop-isolated") {
    c.drop_isolated = parse_bool(key, value);
  } else if (key == "graph-id") {
    c.graph_id = value;
  } else if (key == "heuristics") {
    c.heuristics.clear();
    for (const auto& name : split_list(value)) {
      if (name == "all") {
        c.heuristics.assign(std::begin(kAllHeuristics), std::end(kAllHeuristics));
      } else {
        c.heuristics.push_back(parse_heuristic(name));
      }
    }
  } else if (key == "objectives") {
    c.objectives.clear();
    for (const auto& name : split_list(value)) {
      if (name == "all") {
        c.objectives = {ObjectiveKind::Disagreement, ObjectiveKind::Polarization,
                        ObjectiveKind::WeightedSum};
      } else {
        c.objectives.push_back(parse_objective(name));
      }
    }
  } else if (key == "lambda") {
    c.lambda = parse_number(key, value);
  } else if (key == "k-max") {
    c.k_max = parse_index(key, value);
  } else if (key == "k-step") {
    c.k_step = parse_index(key, value);
  } else if (key == "k-values") {
    c.k_values.clear();
    for (const auto& item : split_list(value)) c.k_values.push_back(parse_index(key, item));
  } else if (key == "seed") {
    c.seed = parse_index(key, value);
  } else if (key == "seeds") {
    c.seeds = parse_index(key, value);
  } else if (key == "mean-opinion-rule") {
    c.mean_opinion_rule = parse_mean_opinion_rule(value);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "plans-out") {
    c.plans_out = value;
  } else if (key == "audit-out") {
    c.audit_out = value;
  } else if (key == "audit") {
    c.audit = parse_bool(key, value);
  } else if (key == "threads") {
    c.threads = parse_index(key, value);
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

SweepConfig parse_sweep_config(std::istream& in, const std::string& source) {
  SweepConfig config;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, lineno, "expected 'key = value'");
    try {
      apply_config_value(config, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return config;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_sweep_config(in, path);
}

InstanceSource resolve_source(const SweepConfig& config) {
  const bool has_paths = !(config.edges_path.empty() && config.opinions_path.empty());
  if (!config.source) return has_paths ? InstanceSource::Dataset : InstanceSource::Generated;
  if (*config.source == InstanceSource::Generated && has_paths) {
    throw std::invalid_argument("edges/opinions-file conflict with a generator model");
  }
  return *config.source;
}

SweepInstance make_instance(const SweepConfig& config, std::uint64_t seed) {
  SweepInstance inst;
  inst.graph_id = config.graph_id.empty() ? default_graph_id(config) : config.graph_id;
  if (resolve_source(config) == InstanceSource::Dataset) {
    if (config.edges_path.empty() || config.opinions_path.empty()) {
      throw std::invalid_argument("dataset source needs edges and opinions-file");
    }
    Dataset data = load_dataset(inst.graph_id, config.edges_path, config.opinions_path,
                                config.weighted, config.drop_isolated);
    inst.graph = std::move(data.graph);
    inst.opinions = std::move(data.opinions);
  } else {
    GeneratorConfig gen = config.generator;
    gen.seed = seed;
    Instance generated = generate(gen);
    inst.graph = std::move(generated.graph);
    inst.opinions = std::move(generated.opinions);
  }
  return inst;
}

std::vector<Index> k_schedule(const SweepConfig& config, Index n) {
  std::vector<Index> ks;
  if (!config.k_values.empty()) {
    ks = config.k_values;
  } else {
    if (config.k_step == 0) throw std::invalid_argument("k-step must be >= 1");
    const Index k_max = config.k_max.value_or(n / 2);
    for (Index k = 0; k <= k_max; k += config.k_step) ks.push_back(k);
  }
  for (Index k : ks) {
    if (k > n) {
      throw std::invalid_argument("k = " + std::to_string(k) + " exceeds node count " +
                                  std::to_string(n));
    }
  }
  return ks;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.heuristics.empty()) throw std::invalid_argument("no heuristics selected");
  if (config.objectives.empty()) throw std::invalid_argument("no objectives selected");
  if (config.seeds == 0) throw std::invalid_argument("seeds must be >= 1");

  SweepResult result;
  for (Index r = 0; r < config.seeds; ++r) {
    const std::uint64_t seed = config.seed + r;
    const SweepInstance inst = make_instance(config, seed);
    const InfluenceMatrix inf(inst.graph);
    const std::vector<Index> ks = k_schedule(config, inst.graph.num_nodes());
    const Index budget = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());

    std::vector<ObjectiveSpec> specs;
    for (ObjectiveKind kind : config.objectives) {
      specs.push_back(ObjectiveSpec::bind(kind, inst.graph, config.lambda));
    }
    // Build the shared forms before fanning out.
    inf.disagreement_form();

    const Index cells = config.heuristics.size() * specs.size();
    std::vector<DisruptionPlan> plans(cells);
    std::vector<std::vector<PrefixAudit>> audits(cells);
    const CounterRng root(seed);
    parallel_for(cells, config.threads, [&](Index cell) {
      const Index h = cell / specs.size();
      const Index o = cell % specs.size();
      const HeuristicKind kind = config.heuristics[h];
      HeuristicOptions options;
      options.seed = root.split(2 + static_cast<std::uint64_t>(kind)).key();
      options.mean_opinion_rule = config.mean_opinion_rule;
      plans[cell] = run_heuristic(kind, inf, inst.graph, inst.opinions, budget,
                                  specs[o], options);
      if (config.audit) audits[cell] = audit_prefixes(inf, inst.graph, plans[cell], ks);
    });

    for (Index cell = 0; cell < cells; ++cell) {
      const DisruptionPlan& plan = plans[cell];
      const std::string heuristic(to_string(*plan.heuristic));
      const std::string objective(to_string(plan.objective.kind));
      for (Index k : ks) {
        const Index step = std::min(k, plan.trajectory.size() - 1);
        result.rows.push_back({heuristic, objective, config.lambda, k,
                               plan.trajectory[step], seed, inst.graph_id});
      }
      for (const PrefixAudit& audit : audits[cell]) {
        for (const BoundReport& report : audit.reports) {
          if (!report.pass) ++result.audit_failures;
          result.audits.push_back({heuristic, objective, seed, inst.graph_id, report});
        }
      }
      result.plans.push_back(plan);
    }
  }
  return result;
}

void write_audit_csv(std::ostream& out, const std::vector<AuditRow>& rows) {
  out << "heuristic,objective,seed,graph_id,k,check,before,after,bound,slack,pass\n";
  for (const AuditRow& r : rows) {
    out << r.heuristic << ',' << r.objective << ',' << r.seed << ',' << r.graph_id
        << ',' << r.report.k << ',' << to_string(r.report.check) << ','
        << format_double(r.report.before) << ',' << format_double(r.report.after)
        << ',' << format_double(r.report.bound) << ','
        << format_double(r.report.slack) << ',' << (r.report.pass ? "pass" : "fail")
        << '\n';
  }
}

std::string table_report(const std::vector<SweepRow>& rows,
                         const std::vector<Index>& ks,
                         const std::string& heuristic,
                         std::optional<std::uint64_t> seed, int digits) {
  if (!seed) {
    for (const SweepRow& r : rows) {
      if (r.heuristic == heuristic) {
        seed = r.seed;
        break;
      }
    }
    if (!seed) throw std::invalid_argument("no rows for heuristic '" + heuristic + "'");
  }
  // objective -> k -> value
  std::map<std::string, std::map<Index, double>> values;
  for (const SweepRow& r : rows) {
    if (r.heuristic == heuristic && r.seed == *seed) values[r.objective][r.k] = r.value;
  }
  auto format = [digits](double x) {
    if (digits < 0) return format_double(x);
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
  };

  const std::pair<const char*, const char*> objectives[] = {
      {"disagreement", "Disagreement"},
      {"polarization", "Polarization"},
      {"weighted-sum", "Weighted Sum"},
  };
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"Objective", "Original"};
  for (Index k : ks) header.push_back("k = " + std::to_string(k));
  table.push_back(header);
  for (const auto& [key, label] : objectives) {
    auto it = values.find(key);
    if (it == values.end()) continue;
    auto cell = [&](Index k) {
      auto v = it->second.find(k);
      if (v == it->second.end()) {
        throw std::invalid_argument("k = " + std::to_string(k) + " missing for " +
                                    std::string(key));
      }
      return format(v->second);
    };
    std::vector<std::string> line{label, cell(0)};
    for (Index k : ks) line.push_back(cell(k));
    table.push_back(std::move(line));
  }
  if (table.size() == 1) {
    throw std::invalid_argument("no objective rows for heuristic '" + heuristic + "'");
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << '|';
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      out << ' ' << std::left << std::setw(static_cast<int>(width[c])) << table[r][c] << " |";
    }
    out << '\n';
    if (r == 0) {
      out << '|';
      for (std::size_t c = 0; c < width.size(); ++c) out << std::string(width[c] + 2, '-') << '|';
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace disrupt
