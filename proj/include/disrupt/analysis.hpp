#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "disrupt/adversary.hpp"

namespace disrupt {

inline constexpr Scalar kBoundTolerance = 1e-9;

enum class BoundCheck {
  Polarization,  // P' <= P + 3k
  Disagreement,  // D' <= D + 8 d_max k
  L1Shift,       // ||z' - z||_1 <= k
  Budget,        // ||s' - s||_0 <= k and |takeovers| <= k
  Extremes,      // every assigned opinion in {0, 1}
};

std::string_view to_string(BoundCheck check);

// `bound` is the allowed increase (or the allowed count for Budget and
// Extremes); slack = bound - (after - before) and pass iff slack >= -1e-9.
struct BoundReport {
  BoundCheck check;
  Scalar before = 0.0;
  Scalar after = 0.0;
  Index k = 0;
  Scalar d_max = 0.0;
  Scalar bound = 0.0;
  Scalar slack = 0.0;
  bool pass = true;
};

BoundReport check_polarization_bound(Scalar p_before, Scalar p_after, Index k);
BoundReport check_disagreement_bound(Scalar d_before, Scalar d_after, Index k,
                                     Scalar d_max);
// Throws std::invalid_argument on length mismatch.
BoundReport check_l1_shift(const OpinionVector& z_before,
                           const OpinionVector& z_after, Index k);

// Polarization, Disagreement, L1Shift, Budget, Extremes for one plan against
// its own budget. Throws std::invalid_argument when the plan is not
// consistent with s (different original vector, repeated or out-of-range
// nodes, or a modified vector that does not match the takeovers).
std::vector<BoundReport> audit_plan(const InfluenceMatrix& inf,
                                    const WeightedGraph& g,
                                    const OpinionVector& s,
                                    const DisruptionPlan& plan);

struct PrefixAudit {
  Index k = 0;
  std::vector<BoundReport> reports;
};

// Audits the first min(k, |takeovers|) takeovers of `plan` against budget k
// for each k in ks, maintaining z' by rank-one updates.
std::vector<PrefixAudit> audit_prefixes(const InfluenceMatrix& inf,
                                        const WeightedGraph& g,
                                        const DisruptionPlan& plan,
                                        std::span<const Index> ks);

inline bool all_pass(std::span<const BoundReport> reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace disrupt
