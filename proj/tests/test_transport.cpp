#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "lly/families.hpp"
#include "lly/transport.hpp"
#include "oracles.hpp"

using lly::Measure;
using lly::Rational;
using lly::Vertex;
using testing_util::graph_of;
using testing_util::q;

namespace {

lly::Graph k3() { return lly::complete(3).graph; }

Rational plan_cost(const lly::Graph& g, const lly::TransportPlan& plan) {
  Rational total(0);
  for (const auto& e : plan.entries) total += e.mass * lly::distance(g, e.from, e.to);
  return total;
}

}  // namespace

TEST(Measure, LazyWalk) {
  auto g = lly::complete(4).graph;
  auto m0 = lly::lazy_measure(g, 0, q(0));
  EXPECT_EQ(m0[0], q(0));
  EXPECT_EQ(m0[1], q(1, 3));
  EXPECT_EQ(m0.support().size(), 3u);
  auto mh = lly::lazy_measure(g, 0, q(1, 2));
  EXPECT_EQ(mh[0], q(1, 2));
  EXPECT_EQ(mh[2], q(1, 6));
  EXPECT_EQ(lly::lazy_measure(g, 0, q(1)), Measure::point(0));
  EXPECT_THROW(lly::lazy_measure(g, 0, q(3, 2)), lly::TransportError);
}

TEST(Measure, RejectsInvalidMasses) {
  using Masses = std::map<Vertex, Rational>;
  EXPECT_THROW(Measure(Masses{{0, q(1, 2)}}), lly::TransportError);
  EXPECT_THROW(Measure(Masses{{0, q(3, 2)}, {1, q(-1, 2)}}), lly::TransportError);
  EXPECT_THROW(Measure(Masses{}), lly::TransportError);
  EXPECT_EQ(Measure(Masses{{0, q(1)}, {1, q(0)}}).support().size(), 1u);
}

TEST(Transport, IdenticalMeasuresCostNothing) {
  auto g = k3();
  auto m = lly::lazy_measure(g, 0, q(1, 3));
  auto sol = lly::solve_transport(g, m, m);
  EXPECT_EQ(sol.distance, q(0));
  for (const auto& e : sol.plan.entries) EXPECT_EQ(e.from, e.to);
  EXPECT_TRUE(lly::verify_duality(sol.plan, sol.potential, g).ok);
}

TEST(Transport, PointMassesMoveTheFullDistance) {
  auto g = lly::cycle(6).graph;
  auto sol = lly::solve_transport(g, Measure::point(0), Measure::point(3));
  EXPECT_EQ(sol.distance, q(3));
  ASSERT_EQ(sol.plan.entries.size(), 1u);
  EXPECT_EQ(sol.plan.entries[0].mass, q(1));
  EXPECT_EQ(sol.potential.value.at(0) - sol.potential.value.at(3), q(3));
}

TEST(Transport, TriangleNonLazyWalks) {
  auto g = k3();
  auto sol = lly::solve_transport(g, lly::lazy_measure(g, 0, q(0)), lly::lazy_measure(g, 1, q(0)));
  EXPECT_EQ(sol.distance, q(1, 2));
  EXPECT_TRUE(sol.potential.integral());
  auto check = lly::verify_duality(sol.plan, sol.potential, g);
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.dual, q(1, 2));
}

TEST(Transport, TwoPointClosedForm) {
  auto g = graph_of({{0, 1}});
  for (long k = 0; k <= 12; ++k) {
    Rational a = q(k, 12);
    auto [w, plan] = lly::wasserstein(g, lly::lazy_measure(g, 0, a), lly::lazy_measure(g, 1, a));
    Rational expect = a * 2 - 1;
    if (expect < 0) expect = -expect;
    EXPECT_EQ(w, expect) << lly::to_string(a);
  }
}

TEST(Duality, RejectsWrongPotentialAndPerturbedPlans) {
  auto g = k3();
  auto m1 = lly::lazy_measure(g, 0, q(0)), m2 = lly::lazy_measure(g, 1, q(0));
  auto sol = lly::solve_transport(g, m1, m2);

  lly::DualPotential zero;
  for (Vertex v = 0; v < 3; ++v) zero.value[v] = 0;
  auto gap = lly::verify_duality(sol.plan, zero, g);
  EXPECT_FALSE(gap.ok);
  EXPECT_EQ(gap.dual, q(0));
  EXPECT_FALSE(gap.violations.empty());

  auto broken = sol.plan;
  broken.entries.front().mass += q(1, 7);
  broken.entries.back().mass -= q(1, 7);
  auto bad = lly::verify_duality(broken, sol.potential, g);
  EXPECT_FALSE(bad.ok);
  bool mentions_marginal = false;
  for (const auto& v : bad.violations) mentions_marginal |= v.find("marginal") != std::string::npos;
  EXPECT_TRUE(mentions_marginal);

  lly::DualPotential steep = sol.potential;
  steep.value[0] = 5;
  EXPECT_FALSE(lly::verify_duality(sol.plan, steep, g).ok);
}

TEST(Duality, AnchorsAtSmallestSourceVertex) {
  auto g = lly::hypercube(3).graph;
  auto m1 = lly::lazy_measure(g, 5, q(1, 4)), m2 = lly::lazy_measure(g, 4, q(1, 4));
  auto f = lly::kantorovich_potential(g, m1, m2);
  EXPECT_EQ(f.value.at(m1.support().front()), q(0));
}

TEST(TransportProperty, MatchesIntegerLipschitzOracle) {
  std::mt19937_64 rng(3);
  for (auto seed : testing_util::corpus_seeds(25)) {
    auto g = lly::random_connected(9, 5, seed).graph;
    for (int rep = 0; rep < 4; ++rep) {
      Vertex x = static_cast<Vertex>(rng() % g.vertex_count());
      Vertex y = static_cast<Vertex>(rng() % g.vertex_count());
      Rational a = q(static_cast<long>(rng() % 4), 4);
      auto sol = lly::solve_transport(g, lly::lazy_measure(g, x, a), lly::lazy_measure(g, y, a));
      Rational expect = oracle::wasserstein(g, oracle::lazy(g, x, a), oracle::lazy(g, y, a));
      ASSERT_EQ(sol.distance, expect) << "seed " << seed;
      ASSERT_EQ(plan_cost(g, sol.plan), sol.distance);
      ASSERT_TRUE(lly::verify_duality(sol.plan, sol.potential, g).ok);
      // Each walk sits within 1 - α of its center.
      ASSERT_LE(sol.distance, (q(1) - a) * 2 + lly::distance(g, x, y));
    }
  }
}

TEST(TransportProperty, ScaleIndependence) {
  for (auto seed : testing_util::corpus_seeds(10)) {
    auto g = lly::random_connected(10, 6, seed).graph;
    for (auto [x, y] : g.edges()) {
      auto m1 = lly::lazy_measure(g, x, q(1, 3)), m2 = lly::lazy_measure(g, y, q(1, 3));
      auto base = lly::solve_transport(g, m1, m2).distance;
      for (long s : {2L, 3L, 7L}) ASSERT_EQ(lly::solve_transport(g, m1, m2, s).distance, base);
    }
  }
}

TEST(TransportProperty, AdjacentLazyPairsHaveIntegerPotentials) {
  for (auto seed : testing_util::corpus_seeds(15)) {
    auto g = lly::random_connected(12, 6, seed).graph;
    for (auto [x, y] : g.edges()) {
      for (Rational a : {q(0), q(1, 3), q(1, 2)}) {
        auto sol = lly::solve_transport(g, lly::lazy_measure(g, x, a), lly::lazy_measure(g, y, a));
        ASSERT_TRUE(sol.potential.integral());
        Rational dual(0);
        for (const auto& [v, val] : sol.potential.value) {
          dual += val * (lly::lazy_measure(g, x, a)[v] - lly::lazy_measure(g, y, a)[v]);
        }
        ASSERT_EQ(dual, sol.distance);
      }
    }
  }
}

TEST(TransportProperty, LazyWalksCanBeFartherApartThanTheirCenters) {
  auto g = lly::star_with_pendants().graph;
  auto w = lly::solve_transport(g, lly::lazy_measure(g, 0, q(0)), lly::lazy_measure(g, 1, q(0))).distance;
  EXPECT_EQ(w, oracle::wasserstein(g, oracle::lazy(g, 0, q(0)), oracle::lazy(g, 1, q(0))));
  EXPECT_GT(w, q(1));
}
