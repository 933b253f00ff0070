#include "disrupt/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace disrupt {

std::string_view to_string(BoundCheck check) {
  switch (check) {
    case BoundCheck::Polarization: return "polarization-bound";
    case BoundCheck::Disagreement: return "disagreement-bound";
    case BoundCheck::L1Shift: return "l1-shift";
    case BoundCheck::Budget: return "budget";
    case BoundCheck::Extremes: return "extremes";
  }
  return "unknown";
}

namespace {

BoundReport make_report(BoundCheck check, Scalar before, Scalar after, Index k,
                        Scalar d_max, Scalar bound) {
  BoundReport r{check, before, after, k, d_max, bound, 0.0, true};
  r.slack = bound - (after - before);
  r.pass = r.slack >= -kBoundTolerance;
  return r;
}

BoundReport budget_report(const DisruptionPlan& plan, Index prefix, Index k) {
  Index changed = 0;
  for (Index i = 0; i < prefix; ++i) {
    const Takeover& t = plan.takeovers[i];
    if (t.opinion != plan.original[static_cast<Eigen::Index>(t.node)]) ++changed;
  }
  return make_report(BoundCheck::Budget, 0.0,
                     static_cast<Scalar>(std::max(changed, prefix)), k, 0.0,
                     static_cast<Scalar>(k));
}

BoundReport extremes_report(const DisruptionPlan& plan, Index prefix, Index k) {
  Index off = 0;
  for (Index i = 0; i < prefix; ++i) {
    const Scalar a = plan.takeovers[i].opinion;
    if (a != 0.0 && a != 1.0) ++off;
  }
  return make_report(BoundCheck::Extremes, 0.0, static_cast<Scalar>(off), k, 0.0,
                     0.0);
}

void require_consistent(const WeightedGraph& g, const DisruptionPlan& plan) {
  const Index n = g.num_nodes();
  if (static_cast<Index>(plan.original.size()) != n ||
      static_cast<Index>(plan.modified.size()) != n) {
    throw std::invalid_argument("audit: plan vectors do not match the graph size");
  }
  OpinionVector rebuilt = plan.original;
  std::vector<bool> seen(n, false);
  for (const Takeover& t : plan.takeovers) {
    if (t.node >= n) {
      throw std::invalid_argument("audit: takeover node " + std::to_string(t.node) +
                                  " out of range");
    }
    if (seen[t.node]) {
      throw std::invalid_argument("audit: node " + std::to_string(t.node) +
                                  " taken over twice");
    }
    seen[t.node] = true;
    rebuilt[static_cast<Eigen::Index>(t.node)] = t.opinion;
  }
  if (rebuilt != plan.modified) {
    throw std::invalid_argument(
        "audit: modified opinions do not match original plus takeovers");
  }
}

}  // namespace

BoundReport check_polarization_bound(Scalar p_before, Scalar p_after, Index k) {
  return make_report(BoundCheck::Polarization, p_before, p_after, k, 0.0,
                     3.0 * static_cast<Scalar>(k));
}

BoundReport check_disagreement_bound(Scalar d_before, Scalar d_after, Index k,
                                     Scalar d_max) {
  return make_report(BoundCheck::Disagreement, d_before, d_after, k, d_max,
                     8.0 * d_max * static_cast<Scalar>(k));
}

BoundReport check_l1_shift(const OpinionVector& z_before,
                           const OpinionVector& z_after, Index k) {
  if (z_before.size() != z_after.size()) {
    throw std::invalid_argument("check_l1_shift: vector lengths differ");
  }
  return make_report(BoundCheck::L1Shift, 0.0, (z_after - z_before).lpNorm<1>(), k,
                     0.0, static_cast<Scalar>(k));
}

std::vector<BoundReport> audit_plan(const InfluenceMatrix& inf,
                                    const WeightedGraph& g,
                                    const OpinionVector& s,
                                    const DisruptionPlan& plan) {
  if (plan.original.size() != s.size() || plan.original != s) {
    throw std::invalid_argument("audit: plan was not built from these opinions");
  }
  require_consistent(g, plan);
  const Index k = plan.budget;
  const Scalar d_max = degrees(g).max_weighted;
  const OpinionVector z = equilibrium(inf, plan.original);
  const OpinionVector z_prime = equilibrium(inf, plan.modified);
  const Index all = plan.takeovers.size();
  return {
      check_polarization_bound(polarization(z), polarization(z_prime), k),
      check_disagreement_bound(disagreement(g, z), disagreement(g, z_prime), k,
                               d_max),
      check_l1_shift(z, z_prime, k),
      budget_report(plan, all, k),
      extremes_report(plan, all, k),
  };
}

std::vector<PrefixAudit> audit_prefixes(const InfluenceMatrix& inf,
                                        const WeightedGraph& g,
                                        const DisruptionPlan& plan,
                                        std::span<const Index> ks) {
  require_consistent(g, plan);
  if (inf.size() != g.num_nodes()) {
    throw std::invalid_argument("audit: influence matrix does not match the graph");
  }
  const Scalar d_max = degrees(g).max_weighted;
  const OpinionVector z = equilibrium(inf, plan.original);
  const Scalar p_before = polarization(z);
  const Scalar d_before = disagreement(g, z);

  std::vector<Index> order(ks.size());
  for (Index i = 0; i < ks.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return ks[a] < ks[b]; });

  std::vector<PrefixAudit> out(ks.size());
  OpinionVector s_prime = plan.original;
  OpinionVector z_prime = z;
  Index applied = 0;
  for (Index idx : order) {
    const Index k = ks[idx];
    const Index prefix = std::min(k, plan.takeovers.size());
    for (; applied < prefix; ++applied) {
      const Takeover& t = plan.takeovers[applied];
      const auto j = static_cast<Eigen::Index>(t.node);
      z_prime = apply_single_change(inf, s_prime, z_prime, t.node, t.opinion - s_prime[j]);
      s_prime[j] = t.opinion;
    }
    auto& reports = out[idx];
    reports.k = k;
    reports.reports = {
        check_polarization_bound(p_before, polarization(z_prime), k),
        check_disagreement_bound(d_before, disagreement(g, z_prime), k, d_max),
        check_l1_shift(z, z_prime, k),
        budget_report(plan, prefix, k),
        extremes_report(plan, prefix, k),
    };
  }
  return out;
}

}  // namespace disrupt
