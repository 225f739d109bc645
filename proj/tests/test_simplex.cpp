#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "lly/min_cost_flow.hpp"
#include "lly/simplex.hpp"

using lly::LpStatus;
using lly::Rational;
using testing_util::q;
using Matrix = std::vector<std::vector<Rational>>;

TEST(Simplex, SolvesSmallProgram) {
  // min -x1 - x2  s.t. x1 + 2x2 + s1 = 4, 3x1 + x2 + s2 = 6
  Matrix A{{q(1), q(2), q(1), q(0)}, {q(3), q(1), q(0), q(1)}};
  auto r = lly::solve_standard_form(A, {q(4), q(6)}, {q(-1), q(-1), q(0), q(0)});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.objective, q(-14, 5));
  EXPECT_EQ(r.primal[0], q(8, 5));
  EXPECT_EQ(r.primal[1], q(6, 5));
}

TEST(Simplex, DetectsInfeasibility) {
  Matrix A{{q(1), q(1)}};
  auto r = lly::solve_standard_form(A, {q(-1)}, {q(1), q(1)});
  EXPECT_EQ(r.status, LpStatus::infeasible);
}

TEST(Simplex, DetectsUnboundedness) {
  Matrix A{{q(1), q(-1)}};
  auto r = lly::solve_standard_form(A, {q(1)}, {q(0), q(-1)});
  EXPECT_EQ(r.status, LpStatus::unbounded);
}

TEST(Simplex, HandlesRedundantRows) {
  Matrix A{{q(1), q(1)}, {q(2), q(2)}};
  auto r = lly::solve_standard_form(A, {q(1), q(2)}, {q(1), q(2)});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.objective, q(1));
}

// Strong duality on random feasible programs: the returned pair certifies itself.
TEST(SimplexProperty, PrimalAndDualCertifyOptimality) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::size_t optimal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 3, n = m + 2 + trial % 4;
    Matrix A(m, std::vector<Rational>(n));
    std::vector<Rational> x0(n), b(m, q(0)), c(n);
    for (auto& v : x0) v = q(std::abs(coef(rng)));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        A[i][j] = q(coef(rng));
        b[i] += A[i][j] * x0[j];
      }
    }
    for (auto& v : c) v = q(coef(rng));
    auto r = lly::solve_standard_form(A, b, c);
    ASSERT_NE(r.status, LpStatus::infeasible);
    if (r.status != LpStatus::optimal) continue;
    ++optimal;
    Rational primal(0), dual(0);
    for (std::size_t j = 0; j < n; ++j) {
      ASSERT_GE(r.primal[j], 0);
      primal += c[j] * r.primal[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += A[i][j] * r.primal[j];
      ASSERT_EQ(row, b[i]);
      dual += b[i] * r.dual[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rational col(0);
      for (std::size_t i = 0; i < m; ++i) col += A[i][j] * r.dual[i];
      ASSERT_LE(col, c[j]);
    }
    ASSERT_EQ(primal, r.objective);
    ASSERT_EQ(dual, r.objective);
  }
  EXPECT_GT(optimal, 50u);
}

TEST(MinCostFlow, LabelsCertifyOptimality) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) cost[u][v] = u == v ? 0 : 1 + static_cast<std::int64_t>(rng() % 5);
    }
    std::vector<long> excess(n, 0);
    for (int k = 0; k < 5; ++k) {
      auto a = rng() % n, b = rng() % n;
      excess[a] += 2;
      excess[b] -= 2;
    }
    auto sol = lly::successive_shortest_paths<long>(cost, excess);
    long total = 0;
    for (std::size_t u = 0; u < n; ++u) {
      long net = 0;
      for (std::size_t v = 0; v < n; ++v) {
        ASSERT_GE(sol.flow[u][v], 0);
        net += sol.flow[u][v] - sol.flow[v][u];
        total += sol.flow[u][v] * cost[u][v];
        ASSERT_LE(sol.label[v] - sol.label[u], cost[u][v]);
        if (sol.flow[u][v] > 0) {
          ASSERT_EQ(sol.label[v] - sol.label[u], cost[u][v]);
        }
      }
      ASSERT_EQ(net, excess[u]);
    }
    ASSERT_EQ(total, sol.cost);
  }
}
