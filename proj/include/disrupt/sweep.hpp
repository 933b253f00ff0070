#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "disrupt/analysis.hpp"
#include "disrupt/dataio.hpp"
#include "disrupt/generators.hpp"

namespace disrupt {

enum class InstanceSource { Generated, Dataset };

struct SweepConfig {
  // Set by the model key; when unset, edges/opinions-file select Dataset.
  std::optional<InstanceSource> source;
  GeneratorConfig generator;
  std::string edges_path;
  std::string opinions_path;
  bool weighted = false;
  bool drop_isolated = true;
  std::string graph_id;  // defaults to a name derived from the source

  std::vector<HeuristicKind> heuristics{std::begin(kAllHeuristics),
                                        std::end(kAllHeuristics)};
  std::vector<ObjectiveKind> objectives{ObjectiveKind::Disagreement,
                                        ObjectiveKind::Polarization,
                                        ObjectiveKind::WeightedSum};
  double lambda = kDefaultLambda;

  std::optional<Index> k_max;     // default floor(n / 2)
  Index k_step = 1;
  std::vector<Index> k_values;    // explicit schedule; overrides k_max/k_step
  std::uint64_t seed = 0;
  Index seeds = 1;                // replications use seed, seed + 1, ...
  MeanOpinionRule mean_opinion_rule = MeanOpinionRule::Closest;

  std::string out;                // sweep CSV
  std::string plans_out;          // optional JSON-lines plans
  std::string audit_out;          // optional audit CSV
  bool audit = false;
  Index threads = 0;              // 0 = hardware concurrency
};

// Flat `key = value` lines, `#` comments. Keys match the flag names without
// the leading dashes (k-max, heuristics, mean-opinion-rule, ...).
SweepConfig parse_sweep_config(std::istream& in, const std::string& source = "<config>");
SweepConfig load_sweep_config(const std::string& path);
// Applies one key/value pair; throws std::invalid_argument on unknown keys or
// malformed values.
void apply_config_value(SweepConfig& config, const std::string& key,
                        const std::string& value);

// Dataset when model = dataset, or when no model is given and edges or
// opinions-file is. Throws std::invalid_argument when a generator model is
// combined with dataset paths.
InstanceSource resolve_source(const SweepConfig& config);

// Instance for one replication seed.
struct SweepInstance {
  std::string graph_id;
  WeightedGraph graph;
  OpinionVector opinions;
};
SweepInstance make_instance(const SweepConfig& config, std::uint64_t seed);

std::vector<Index> k_schedule(const SweepConfig& config, Index n);

struct AuditRow {
  std::string heuristic;
  std::string objective;
  std::uint64_t seed = 0;
  std::string graph_id;
  BoundReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<DisruptionPlan> plans;  // one per grid cell, budget = max k
  std::vector<AuditRow> audits;
  Index audit_failures = 0;
};

// Rows are ordered by seed, heuristic, objective, then k, matching the order
// of the configured lists.
SweepResult run_sweep(const SweepConfig& config);

void write_audit_csv(std::ostream& out, const std::vector<AuditRow>& rows);

// Objective table (Disagreement / Polarization / Weighted Sum rows, columns
// Original and each requested k) for one heuristic and seed. digits < 0
// prints values exactly as stored in the CSV; otherwise fixed-point.
std::string table_report(const std::vector<SweepRow>& rows,
                         const std::vector<Index>& ks,
                         const std::string& heuristic = "greedy",
                         std::optional<std::uint64_t> seed = std::nullopt,
                         int digits = -1);

}  // namespace disrupt
