#include <doctest.h>

#include "disrupt/generators.hpp"
#include "disrupt/objectives.hpp"
#include "oracles.hpp"

using namespace disrupt;

TEST_CASE("disagreement golden values") {
  const auto g = oracle::single_edge();
  CHECK(disagreement(g, oracle::vec({1.0 / 3, 2.0 / 3})) == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(disagreement(g, oracle::vec({1.0 / 6, 1.0 / 3})) == doctest::Approx(1.0 / 36).epsilon(1e-14));
  CHECK(disagreement(g, oracle::vec({0.4, 0.4})) == 0.0);
  CHECK_THROWS_AS(disagreement(g, oracle::vec({0.4})), std::invalid_argument);
}

TEST_CASE("polarization golden values") {
  CHECK(polarization(oracle::vec({1.0 / 3, 2.0 / 3})) == doctest::Approx(1.0 / 18).epsilon(1e-14));
  CHECK(polarization(oracle::vec({1.0 / 6, 1.0 / 3})) == doctest::Approx(1.0 / 72).epsilon(1e-14));
  CHECK(polarization(oracle::vec({0.7, 0.7, 0.7})) <= 1e-30);
}

TEST_CASE("weighted sum") {
  const auto g = oracle::single_edge();
  const auto z = oracle::vec({1.0 / 3, 2.0 / 3});
  CHECK(weighted_sum(g, z, 0.0) == polarization(z));
  // 1/18 + 1 * (2 / 1) * 1/9
  CHECK(weighted_sum(g, z, 1.0) == doctest::Approx(5.0 / 18).epsilon(1e-14));
  CHECK(weighted_sum(g, oracle::vec({0.2, 0.2}), 1.0) == 0.0);
  CHECK_THROWS_AS(weighted_sum(WeightedGraph(2, std::vector<Edge>{}), z, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ObjectiveSpec::bind(ObjectiveKind::Polarization, g, -1.0),
                  std::invalid_argument);
}

TEST_CASE("objective_of_innate on the single edge") {
  const auto g = oracle::single_edge();
  const InfluenceMatrix inf(g);
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::Disagreement, g);
  CHECK(objective_of_innate(inf, g, oracle::vec({0.0, 1.0}), spec) ==
        doctest::Approx(1.0 / 9).epsilon(1e-14));
  for (auto kind : {ObjectiveKind::Disagreement, ObjectiveKind::Polarization,
                    ObjectiveKind::WeightedSum}) {
    CHECK(std::abs(objective_of_innate(inf, g, oracle::vec({0.5, 0.5}),
                                       ObjectiveSpec::bind(kind, g))) <= 1e-15);
  }
}

TEST_CASE("quadratic forms agree with the equilibrium path") {
  CounterRng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 30;
    const auto g = oracle::connected_er(n, 0.2, rng);
    const InfluenceMatrix inf(g);
    const auto s = opinions_uniform(n, rng);
    const auto ss = oracle::to_std(s);
    for (auto kind : {ObjectiveKind::Disagreement, ObjectiveKind::Polarization,
                      ObjectiveKind::WeightedSum}) {
      const auto spec = ObjectiveSpec::bind(kind, g, 0.7);
      const double direct = objective_of_innate(inf, g, s, spec);
      const double quadratic = QuadraticObjective(inf, spec).value(s);
      CHECK(std::abs(direct - quadratic) <= 1e-9);
      CHECK(std::abs(direct - oracle::objective(g, ss, kind, 0.7)) <= 1e-9);
      CHECK(direct >= 0.0);
    }
    // Edge sum equals z^T L z.
    const auto z = equilibrium(inf, s);
    CHECK(std::abs(disagreement(g, z) - z.dot(laplacian(g) * z)) <= 1e-10);
  }
}

TEST_CASE("incremental gain matches a re-evaluation") {
  CounterRng rng(22);
  const auto g = oracle::connected_er(25, 0.3, rng);
  const InfluenceMatrix inf(g);
  const auto s = opinions_uniform(25, rng);
  const auto spec = ObjectiveSpec::bind(ObjectiveKind::WeightedSum, g);
  const QuadraticObjective q(inf, spec);
  Vector grad = q.gradient(s);
  const double base = q.value(s);
  for (Index j = 0; j < 25; ++j) {
    for (double a : {0.0, 1.0}) {
      auto t = s;
      t[j] = a;
      CHECK(std::abs(base + q.gain(grad, j, a - s[j]) - q.value(t)) <= 1e-10);
    }
  }
  auto t = s;
  t[3] = 1.0;
  q.update_gradient(grad, 3, 1.0 - s[3]);
  CHECK((grad - q.gradient(t)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("convexity and boundary maxima in s") {
  CounterRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 3 + rng.below(20);
    const auto g = oracle::connected_er(n, 0.4, rng);
    const InfluenceMatrix inf(g);
    const auto s1 = opinions_uniform(n, rng);
    const auto s2 = opinions_uniform(n, rng);
    const double alpha = rng.uniform();
    for (auto kind : {ObjectiveKind::Disagreement, ObjectiveKind::Polarization,
                      ObjectiveKind::WeightedSum}) {
      const auto spec = ObjectiveSpec::bind(kind, g);
      auto f = [&](const OpinionVector& s) { return objective_of_innate(inf, g, s, spec); };
      CHECK(f(alpha * s1 + (1 - alpha) * s2) <= alpha * f(s1) + (1 - alpha) * f(s2) + 1e-9);

      const Index j = rng.below(n);
      auto probe = s1;
      probe[j] = 0.0;
      const double at0 = f(probe);
      probe[j] = 1.0;
      const double at1 = f(probe);
      for (int step = 1; step < 10; ++step) {
        probe[j] = step / 10.0;
        CHECK(f(probe) <= std::max(at0, at1) + 1e-9);
      }
    }
  }
}
