#include <doctest.h>

#include <set>

#include "disrupt/adversary.hpp"
#include "disrupt/generators.hpp"
#include "oracles.hpp"

using namespace disrupt;

namespace {

const ObjectiveKind kKinds[] = {ObjectiveKind::Disagreement, ObjectiveKind::Polarization,
                                ObjectiveKind::WeightedSum};

void check_plan_shape(const DisruptionPlan& plan, Index k) {
  CHECK(plan.takeovers.size() <= k);
  CHECK(plan.trajectory.size() == plan.takeovers.size() + 1);
  std::set<Index> nodes;
  for (const auto& t : plan.takeovers) {
    CHECK(nodes.insert(t.node).second);
    CHECK((t.opinion == 0.0 || t.opinion == 1.0));
  }
  Index changed = 0;
  for (Eigen::Index i = 0; i < plan.original.size(); ++i) {
    if (plan.original[i] != plan.modified[i]) {
      ++changed;
      CHECK(nodes.count(static_cast<Index>(i)) == 1);
    }
  }
  CHECK(changed <= k);
}

}  // namespace

TEST_CASE("greedy on the single edge") {
  const auto g = oracle::single_edge();
  const InfluenceMatrix inf(g);
  const auto s = oracle::vec({0.5, 0.5});
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::Disagreement, g);

  const auto one = greedy(inf, g, s, 1, spec);
  REQUIRE(one.takeovers.size() == 1);
  CHECK(one.final_value() == doctest::Approx(1.0 / 36).epsilon(1e-12));
  // Four candidates tie; lowest node and opinion 0 win.
  CHECK(one.takeovers[0] == Takeover{0, 0.0});

  const auto two = greedy(inf, g, s, 2, spec);
  REQUIRE(two.takeovers.size() == 2);
  CHECK(two.final_value() == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(two.modified[0] != two.modified[1]);
  CHECK_FALSE(two.stopped_early);

  const auto zero = greedy(inf, g, s, 0, spec);
  CHECK(zero.takeovers.empty());
  CHECK(zero.trajectory.size() == 1);
  CHECK(zero.trajectory[0] == doctest::Approx(0.0));
}

TEST_CASE("greedy rejects bad input") {
  const std::vector<Edge> edges{{0, 1, 1.0}};
  const WeightedGraph g(3, edges);
  const InfluenceMatrix inf(g);
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::Polarization, g);
  CHECK_THROWS_AS(greedy(inf, g, oracle::vec({0.1, 0.2, 0.3}), 1, spec), std::invalid_argument);
  const auto e = oracle::single_edge();
  const InfluenceMatrix inf2(e);
  CHECK_THROWS_AS(greedy(inf2, e, oracle::vec({0.1, 0.2}), 3, spec), std::invalid_argument);
  CHECK_THROWS_AS(greedy(inf2, e, oracle::vec({0.1, 1.2}), 1, spec), std::invalid_argument);
}

TEST_CASE("mean opinion selection") {
  const std::vector<Edge> path{{0, 1, 1.0}, {1, 2, 1.0}};
  const auto g = build_graph(3, path);
  const InfluenceMatrix inf(g);
  const auto s = oracle::vec({0.1, 0.5, 0.9});
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::Polarization, g);
  const auto plan = mean_opinion(inf, g, s, 1, spec, false);
  CHECK(plan.takeovers[0].node == 1);

  // Literal argmax reading: 0.1 and 0.9 tie at distance 0.4, lowest index wins.
  const auto far = mean_opinion(inf, g, s, 1, spec, false, nullptr, MeanOpinionRule::Farthest);
  CHECK(far.takeovers[0].node == 0);

  const auto e = oracle::single_edge();
  const InfluenceMatrix inf2(e);
  const auto p = mean_opinion(inf2, e, oracle::vec({0.5, 0.5}), 1,
                              ObjectiveSpec::bind(ObjectiveKind::Polarization, e), false);
  CHECK(p.final_value() == doctest::Approx(1.0 / 72).epsilon(1e-12));

  CHECK_THROWS_AS(mean_opinion(inf, g, s, 1, spec, true, nullptr), std::invalid_argument);
}

TEST_CASE("randomized heuristics replay under a fixed seed") {
  CounterRng rng(31);
  const auto g = oracle::connected_er(40, 0.2, rng);
  const InfluenceMatrix inf(g);
  const auto s = opinions_uniform(40, rng);
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::WeightedSum, g);
  for (auto kind : {HeuristicKind::MeanOpinionRandomized, HeuristicKind::Random}) {
    const auto a = run_heuristic(kind, inf, g, s, 15, spec, {.seed = 99});
    const auto b = run_heuristic(kind, inf, g, s, 15, spec, {.seed = 99});
    const auto c = run_heuristic(kind, inf, g, s, 15, spec, {.seed = 100});
    CHECK(a.takeovers == b.takeovers);
    CHECK(a.trajectory == b.trajectory);
    CHECK(a.takeovers != c.takeovers);
  }
}

TEST_CASE("max degree selection") {
  const std::vector<Edge> star{{3, 0, 0.2}, {3, 1, 0.2}, {3, 2, 0.2}, {3, 4, 0.2}, {0, 1, 1.0}};
  const auto g = build_graph(5, star);
  const InfluenceMatrix inf(g);
  const auto s = oracle::vec({0.5, 0.5, 0.5, 0.5, 0.5});
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::Disagreement, g);
  const auto plan = max_degree(inf, g, s, 3, spec, false);
  CHECK(plan.takeovers[0].node == 3);
  // Nodes 0 and 1 tie on two neighbors; lower index first.
  CHECK(plan.takeovers[1].node == 0);
  CHECK(plan.takeovers[2].node == 1);
  // Weighted: 0 and 1 have 1.2 against the center's 0.8.
  const auto weighted = max_degree(inf, g, s, 2, spec, true);
  CHECK(weighted.takeovers[0].node == 0);
  CHECK(weighted.takeovers[1].node == 1);

  const std::vector<Edge> path{{0, 1, 1.0}, {1, 2, 1.0}};
  const auto pg = build_graph(3, path);
  const InfluenceMatrix pinf(pg);
  CHECK(max_degree(pinf, pg, oracle::vec({0.2, 0.4, 0.6}), 1, spec, false).takeovers[0].node == 1);
}

TEST_CASE("random heuristic") {
  CounterRng rng(32);
  const auto g = oracle::connected_er(12, 0.4, rng);
  const InfluenceMatrix inf(g);
  const auto s = opinions_uniform(12, rng);
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::Polarization, g);
  CounterRng heuristic_rng(5);
  const auto all = random_heuristic(inf, g, s, 12, spec, heuristic_rng);
  check_plan_shape(all, 12);
  CHECK(all.takeovers.size() == 12);

  // Every single takeover on the centrist edge gives D' = 1/36.
  const auto e = oracle::single_edge();
  const InfluenceMatrix einf(e);
  const auto dspec = ObjectiveSpec::bind(ObjectiveKind::Disagreement, e);
  bool saw_node0_opinion0 = false;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    CounterRng r(seed);
    const auto plan = random_heuristic(einf, e, oracle::vec({0.5, 0.5}), 1, dspec, r);
    CHECK(plan.final_value() == doctest::Approx(1.0 / 36).epsilon(1e-12));
    saw_node0_opinion0 |= plan.takeovers[0] == Takeover{0, 0.0};
  }
  CHECK(saw_node0_opinion0);
}

TEST_CASE("brute force examples") {
  const auto e = oracle::single_edge();
  const InfluenceMatrix inf(e);
  const auto s = oracle::vec({0.5, 0.5});
  const auto pspec = ObjectiveSpec::bind(ObjectiveKind::Polarization, e);
  CHECK(brute_force_optimal(inf, e, s, 2, pspec).final_value() ==
        doctest::Approx(1.0 / 18).epsilon(1e-12));
  const auto zero = brute_force_optimal(inf, e, s, 0, pspec);
  CHECK(zero.takeovers.empty());
  CHECK(zero.final_value() == doctest::Approx(0.0));
  CHECK_FALSE(zero.heuristic.has_value());

  CHECK(brute_force_size(6, 2) == 1 + 12 + 60);
  CHECK(brute_force_size(2, 5) == 1 + 4 + 4);
  CounterRng rng(33);
  const auto big = erdos_renyi(200, 0.1, rng);
  const InfluenceMatrix big_inf(big);
  CHECK_THROWS_AS(brute_force_optimal(big_inf, big, opinions_uniform(200, rng), 5, pspec),
                  std::invalid_argument);
}

TEST_CASE("brute force matches a cache-free enumerator") {
  CounterRng rng(34);
  for (int trial = 0; trial < 6; ++trial) {
    const auto g = oracle::connected_er(6, 0.5, rng);
    const InfluenceMatrix inf(g);
    const auto s = opinions_uniform(6, rng);
    for (auto kind : kKinds) {
      const auto plan = brute_force_optimal(inf, g, s, 2, ObjectiveSpec::bind(kind, g));
      check_plan_shape(plan, 2);
      const double expected = oracle::naive_optimum(g, oracle::to_std(s), 2, kind);
      CHECK(std::abs(plan.final_value() - expected) <= 1e-10);
      CHECK(std::abs(oracle::objective(g, oracle::to_std(plan.modified), kind) - expected) <= 1e-10);
    }
  }
}

TEST_CASE("greedy properties on small instances") {
  CounterRng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 3 + rng.below(6);
    const auto g = oracle::connected_er(n, 0.5, rng);
    const InfluenceMatrix inf(g);
    const auto s = opinions_uniform(n, rng);
    const Index k = 1 + rng.below(2);
    for (auto kind : kKinds) {
      const auto spec = ObjectiveSpec::bind(kind, g);
      const auto plan = greedy(inf, g, s, k, spec);
      check_plan_shape(plan, k);
      for (Index i = 1; i < plan.trajectory.size(); ++i) {
        CHECK(plan.trajectory[i] >= plan.trajectory[i - 1]);
      }
      const auto best = brute_force_optimal(inf, g, s, k, spec);
      CHECK(plan.final_value() <= best.final_value() + 1e-9);
      for (const auto& t : best.takeovers) {
        auto probe = best.modified;
        for (int step = 1; step < 10; ++step) {
          probe[t.node] = step / 10.0;
          CHECK(objective_of_innate(inf, g, probe, spec) <= best.final_value() + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("cached greedy follows the slow re-solving greedy") {
  CounterRng rng(36);
  for (int trial = 0; trial < 4; ++trial) {
    const Index n = 20 + rng.below(20);
    const auto g = oracle::connected_er(n, 0.2, rng);
    const InfluenceMatrix inf(g);
    const auto s = opinions_uniform(n, rng);
    for (auto kind : kKinds) {
      const auto plan = greedy(inf, g, s, 8, ObjectiveSpec::bind(kind, g));
      const auto slow = oracle::slow_greedy(g, oracle::to_std(s), 8, kind);
      REQUIRE(slow.size() == plan.takeovers.size());
      for (Index i = 0; i < slow.size(); ++i) {
        CHECK(plan.takeovers[i].node == slow[i].node);
        CHECK(plan.takeovers[i].opinion == slow[i].opinion);
        CHECK(std::abs(plan.trajectory[i + 1] - slow[i].value) <= 1e-8);
      }
    }
  }
}

TEST_CASE("every heuristic respects the plan invariants") {
  CounterRng rng(37);
  const auto g = oracle::connected_er(30, 0.2, rng);
  const InfluenceMatrix inf(g);
  const auto s = opinions_uniform(30, rng);
  for (auto kind : kAllHeuristics) {
    for (auto objective : kKinds) {
      const auto plan = run_heuristic(kind, inf, g, s, 10, ObjectiveSpec::bind(objective, g),
                                      {.seed = 4});
      check_plan_shape(plan, 10);
      CHECK(plan.heuristic == kind);
      if (kind != HeuristicKind::Greedy) CHECK(plan.takeovers.size() == 10);
      // Trajectory values are objective values of the prefixes.
      auto prefix = s;
      for (Index i = 0; i < plan.takeovers.size(); ++i) {
        prefix[plan.takeovers[i].node] = plan.takeovers[i].opinion;
        CHECK(std::abs(plan.trajectory[i + 1] -
                       oracle::objective(g, oracle::to_std(prefix), objective)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("heuristic names round-trip") {
  for (auto kind : kAllHeuristics) CHECK(parse_heuristic(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_heuristic("nope"), std::invalid_argument);
  CHECK(parse_mean_opinion_rule("farthest") == MeanOpinionRule::Farthest);
  CHECK_THROWS_AS(parse_mean_opinion_rule("middle"), std::invalid_argument);
}
