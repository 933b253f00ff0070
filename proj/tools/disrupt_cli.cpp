// Experiment driver: synthetic instances, budget sweeps, plan audits, exact
// small-instance optima and objective tables.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "disrupt/sweep.hpp"

using namespace disrupt;

namespace {

std::vector<Index> parse_k_list(const std::string& text) {
  std::vector<Index> ks;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    ks.push_back(static_cast<Index>(std::stoull(item)));
  }
  return ks;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

struct InstanceFlags {
  std::string edges;
  std::string opinions;
  bool weighted = false;
  bool drop_isolated = true;

  void add(CLI::App* app) {
    app->add_option("--edges", edges, "Edge list (u v [w] per line)")->required();
    app->add_option("--opinions", opinions, "Opinion file (id value per line)")->required();
    app->add_flag("--weighted", weighted, "Read a weight column");
    app->add_flag("!--keep-isolated", drop_isolated, "Keep zero-degree nodes");
  }

  Dataset load() const {
    return load_dataset("input", edges, opinions, weighted, drop_isolated);
  }
};

void print_error(const std::string& kind, const std::string& message) {
  nlohmann::json j{{"error", kind}, {"message", message}};
  std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adversarial disruption of Friedkin-Johnsen opinion equilibria"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("disrupt ") + DISRUPT_VERSION +
                                        " rng " + std::string(CounterRng::kName));

  // gen
  auto* gen = app.add_subcommand("gen", "Write a synthetic instance");
  GeneratorConfig gen_config;
  std::string gen_model = "er", gen_opinions = "uniform";
  std::string gen_edges_out, gen_opinions_out;
  gen->add_option("--model", gen_model, "er | pa | sbm")->capture_default_str();
  gen->add_option("--n", gen_config.n, "Node count")->capture_default_str();
  gen->add_option("--p", gen_config.p, "Erdos-Renyi edge probability")->capture_default_str();
  gen->add_option("--m-attach", gen_config.m_attach, "Preferential attachment edges per node")
      ->capture_default_str();
  gen->add_option("--p11", gen_config.p11)->capture_default_str();
  gen->add_option("--p22", gen_config.p22)->capture_default_str();
  gen->add_option("--p12", gen_config.p12)->capture_default_str();
  gen->add_option("--opinion-model", gen_opinions, "uniform | beta")->capture_default_str();
  gen->add_option("--alpha1", gen_config.alpha1)->capture_default_str();
  gen->add_option("--beta1", gen_config.beta1)->capture_default_str();
  gen->add_option("--alpha2", gen_config.alpha2)->capture_default_str();
  gen->add_option("--beta2", gen_config.beta2)->capture_default_str();
  gen->add_option("--seed", gen_config.seed)->capture_default_str();
  gen->add_option("--edges-out", gen_edges_out, "Edge list output")->required();
  gen->add_option("--opinions-out", gen_opinions_out, "Opinion output")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a budget sweep");
  std::string sweep_config_path;
  std::vector<std::string> sweep_sets;
  std::map<std::string, std::string> sweep_flags;
  bool sweep_audit = false;
  bool sweep_weighted = false;
  bool sweep_keep_isolated = false;
  sweep->add_option("--config", sweep_config_path, "key = value config file");
  sweep->add_option("--set", sweep_sets, "Extra key=value override (repeatable)");
  for (const char* key : {"seed", "seeds", "k-max", "k-step", "k-values", "lambda",
                          "heuristics", "objectives", "out", "mean-opinion-rule",
                          "plans-out", "audit-out", "threads", "model", "n", "p",
                          "m-attach", "opinions", "edges", "opinions-file",
                          "graph-id"}) {
    sweep->add_option_function<std::string>(
        std::string("--") + key,
        [&sweep_flags, key](const std::string& v) { sweep_flags[key] = v; });
  }
  sweep->add_flag("--audit", sweep_audit, "Check the disruption bounds on every point");
  sweep->add_flag("--weighted", sweep_weighted, "Read a weight column from --edges");
  sweep->add_flag("--keep-isolated", sweep_keep_isolated, "Keep zero-degree dataset nodes");

  // audit
  auto* audit = app.add_subcommand("audit", "Re-check stored plans against the bounds");
  InstanceFlags audit_instance;
  std::string audit_plans;
  audit_instance.add(audit);
  audit->add_option("--plans", audit_plans, "JSON-lines plan file")->required();

  // brute
  auto* brute = app.add_subcommand("brute", "Exact optimum on a small instance");
  InstanceFlags brute_instance;
  Index brute_k = 1;
  std::string brute_objective = "disagreement";
  double brute_lambda = kDefaultLambda;
  brute_instance.add(brute);
  brute->add_option("--k", brute_k, "Budget")->capture_default_str();
  brute->add_option("--objective", brute_objective)->capture_default_str();
  brute->add_option("--lambda", brute_lambda)->capture_default_str();

  // table
  auto* table = app.add_subcommand("table", "Objective table from a sweep CSV");
  std::string table_in, table_ks = "20,50,100,200", table_heuristic = "greedy";
  int table_digits = -1;
  std::optional<std::uint64_t> table_seed;
  table->add_option("--in", table_in, "Sweep CSV")->required();
  table->add_option("--ks", table_ks, "Comma-separated budgets")->capture_default_str();
  table->add_option("--heuristic", table_heuristic)->capture_default_str();
  table->add_option("--seed", table_seed, "Seed to report (default: first)");
  table->add_option("--digits", table_digits,
                    "Fixed-point digits; negative prints stored values")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) {
      gen_config.model = parse_graph_model(gen_model);
      gen_config.opinions = parse_opinion_model(gen_opinions);
      const Instance inst = generate(gen_config);
      auto edges_out = open_output(gen_edges_out);
      write_edgelist(edges_out, inst.graph);
      auto opinions_out = open_output(gen_opinions_out);
      write_opinions(opinions_out, inst.opinions);
      std::cout << "wrote " << inst.graph.num_nodes() << " nodes, "
                << inst.graph.num_edges() << " edges\n";
    } else if (*sweep) {
      SweepConfig config = sweep_config_path.empty() ? SweepConfig{}
                                                     : load_sweep_config(sweep_config_path);
      for (const auto& [key, value] : sweep_flags) apply_config_value(config, key, value);
      for (const auto& kv : sweep_sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        }
        apply_config_value(config, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (sweep_audit) config.audit = true;
      if (sweep_weighted) config.weighted = true;
      if (sweep_keep_isolated) config.drop_isolated = false;

      const SweepResult result = run_sweep(config);
      if (config.out.empty()) {
        write_sweep_csv(std::cout, result.rows);
      } else {
        auto out = open_output(config.out);
        write_sweep_csv(out, result.rows);
      }
      if (!config.plans_out.empty()) {
        auto out = open_output(config.plans_out);
        for (const auto& plan : result.plans) write_plan(out, plan);
      }
      if (!config.audit_out.empty()) {
        auto out = open_output(config.audit_out);
        write_audit_csv(out, result.audits);
      }
      if (config.audit) {
        std::cerr << "audit: " << result.audits.size() << " checks, "
                  << result.audit_failures << " failures\n";
        if (result.audit_failures > 0) return 3;
      }
    } else if (*audit) {
      const Dataset data = audit_instance.load();
      const InfluenceMatrix inf(data.graph);
      std::ifstream in(audit_plans);
      if (!in) throw std::runtime_error("cannot open '" + audit_plans + "'");
      const auto plans = read_plans(in, audit_plans);
      Index failures = 0;
      std::cout << "plan,heuristic,objective,check,k,slack,pass\n";
      for (Index i = 0; i < plans.size(); ++i) {
        const auto& plan = plans[i];
        for (const BoundReport& r : audit_plan(inf, data.graph, data.opinions, plan)) {
          if (!r.pass) ++failures;
          std::cout << i << ',' << (plan.heuristic ? to_string(*plan.heuristic) : "brute-force")
                    << ',' << to_string(plan.objective.kind) << ',' << to_string(r.check)
                    << ',' << r.k << ',' << format_double(r.slack) << ','
                    << (r.pass ? "pass" : "fail") << '\n';
        }
      }
      if (failures > 0) return 3;
    } else if (*brute) {
      const Dataset data = brute_instance.load();
      const InfluenceMatrix inf(data.graph);
      const auto spec =
          ObjectiveSpec::bind(parse_objective(brute_objective), data.graph, brute_lambda);
      const DisruptionPlan plan =
          brute_force_optimal(inf, data.graph, data.opinions, brute_k, spec);
      write_plan(std::cout, plan);
    } else if (*table) {
      std::ifstream in(table_in);
      if (!in) throw std::runtime_error("cannot open '" + table_in + "'");
      const auto rows = read_sweep_csv(in, table_in);
      std::cout << table_report(rows, parse_k_list(table_ks), table_heuristic, table_seed,
                                table_digits);
    }
  } catch (const ParseError& e) {
    print_error("parse", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    print_error("invalid-argument", e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("runtime", e.what());
    return 1;
  }
  return 0;
}
