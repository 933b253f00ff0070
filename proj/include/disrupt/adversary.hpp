#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "disrupt/objectives.hpp"
#include "disrupt/rng.hpp"

namespace disrupt {

enum class HeuristicKind {
  Greedy,
  MeanOpinion,
  MeanOpinionRandomized,
  MaxDegree,
  MaxWeightedDegree,
  Random,
};

inline constexpr HeuristicKind kAllHeuristics[] = {
    HeuristicKind::Greedy,    HeuristicKind::MeanOpinion,
    HeuristicKind::MeanOpinionRandomized, HeuristicKind::MaxDegree,
    HeuristicKind::MaxWeightedDegree,     HeuristicKind::Random,
};

std::string_view to_string(HeuristicKind kind);
HeuristicKind parse_heuristic(std::string_view name);

// Which end of the distance-to-mean ordering Mean Opinion targets.
enum class MeanOpinionRule { Closest, Farthest };

std::string_view to_string(MeanOpinionRule rule);
MeanOpinionRule parse_mean_opinion_rule(std::string_view name);

struct Takeover {
  Index node;
  Scalar opinion;

  bool operator==(const Takeover&) const = default;
};

struct DisruptionPlan {
  // Empty for plans produced by brute_force_optimal.
  std::optional<HeuristicKind> heuristic;
  ObjectiveSpec objective;
  Index budget = 0;
  std::vector<Takeover> takeovers;
  OpinionVector original;
  OpinionVector modified;
  // trajectory[i] = objective after the first i takeovers.
  std::vector<Scalar> trajectory;
  bool stopped_early = false;

  Scalar final_value() const { return trajectory.back(); }
};

// Greedy: each step takes the (node, extreme) pair with the
// largest objective among nodes not yet taken, and keeps it unless the
// objective would strictly decrease. Rejects graphs with isolated nodes.
DisruptionPlan greedy(const InfluenceMatrix& inf, const WeightedGraph& g,
                      const OpinionVector& s, Index k, const ObjectiveSpec& spec);

// Targets the untaken node whose current innate opinion is closest to (or,
// with Farthest, farthest from) the current mean innate opinion. The new
// opinion is the better extreme, or a fair coin when randomized.
DisruptionPlan mean_opinion(const InfluenceMatrix& inf, const WeightedGraph& g,
                            const OpinionVector& s, Index k,
                            const ObjectiveSpec& spec, bool randomized,
                            CounterRng* rng = nullptr,
                            MeanOpinionRule rule = MeanOpinionRule::Closest);

// Targets the untaken node of highest degree (neighbor count, or weighted
// degree when weighted); the new opinion is the better extreme.
DisruptionPlan max_degree(const InfluenceMatrix& inf, const WeightedGraph& g,
                          const OpinionVector& s, Index k,
                          const ObjectiveSpec& spec, bool weighted);

// Uniform untaken node, fair-coin extreme.
DisruptionPlan random_heuristic(const InfluenceMatrix& inf,
                                const WeightedGraph& g, const OpinionVector& s,
                                Index k, const ObjectiveSpec& spec,
                                CounterRng& rng);

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

// Number of candidate plans brute_force_optimal visits: sum over i <= k of
// C(n, i) 2^i, saturating at UINT64_MAX.
std::uint64_t brute_force_size(Index n, Index k);

// Exact maximizer over all sets of at most k nodes with extreme assignments.
// Ties go to the plan with fewer takeovers, then to the lexicographically
// smallest (node, opinion) sequence.
DisruptionPlan brute_force_optimal(const InfluenceMatrix& inf,
                                   const WeightedGraph& g,
                                   const OpinionVector& s, Index k,
                                   const ObjectiveSpec& spec);

struct HeuristicOptions {
  std::uint64_t seed = 0;
  MeanOpinionRule mean_opinion_rule = MeanOpinionRule::Closest;
};

// Dispatches to the heuristic above; randomized heuristics draw from a
// CounterRng seeded with options.seed.
DisruptionPlan run_heuristic(HeuristicKind kind, const InfluenceMatrix& inf,
                             const WeightedGraph& g, const OpinionVector& s,
                             Index k, const ObjectiveSpec& spec,
                             const HeuristicOptions& options = {});

}  // namespace disrupt
