#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lly/families.hpp"
#include "lly/report.hpp"
#include "lly/verify.hpp"

using testing_util::q;

namespace {

const lly::CheckResult& find(const lly::VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(Report, TriangleAndCycle) {
  auto k3 = lly::complete(3).graph;
  auto r = lly::curvature_report(k3, nullptr, {});
  EXPECT_TRUE(r.positively_curved);
  for (const auto& e : r.edges) EXPECT_EQ(e.kappa, q(3, 2));
  auto c6 = lly::curvature_report(lly::cycle(6).graph, nullptr, {});
  EXPECT_FALSE(c6.positively_curved);
  EXPECT_EQ(c6.min_kappa, q(0));
}

TEST(Report, Figure1) {
  auto fam = lly::figure1();
  auto r = lly::curvature_report(fam.graph, &*fam.rotation, {lly::CurvatureMode::comb, q(0), 1});
  EXPECT_TRUE(r.positively_curved);
  EXPECT_EQ(r.max_degree, 16u);
  EXPECT_EQ(r.min_degree, 3u);
  EXPECT_EQ(r.min_kappa, q(1, 48));
  ASSERT_TRUE(r.min_phi.has_value());
  EXPECT_EQ(*r.min_phi, q(-5, 3));
  auto j = lly::to_json(r, fam.graph);
  EXPECT_EQ(j["summary"]["positively_curved"], true);
  EXPECT_EQ(j["summary"]["combinatorially_positive"], false);
  EXPECT_EQ(j["graph"]["vertex_count"], 17);
}

TEST(Report, ModesAndSerialization) {
  auto g = lly::complete(3).graph;
  auto alpha = lly::curvature_report(g, nullptr, {lly::CurvatureMode::alpha, q(1, 2), 1});
  EXPECT_EQ(alpha.edges.front().kappa, q(3, 4));
  EXPECT_EQ(lly::to_json(alpha, g)["alpha"], "1/2");
  auto zero = lly::curvature_report(g, nullptr, {lly::CurvatureMode::zero, q(0), 1});
  EXPECT_EQ(*zero.edges.front().kappa_zero, q(1, 2));
  EXPECT_EQ(lly::to_csv(zero, g), "u,v,kappa,kappa_zero\n0,1,3/2,1/2\n0,2,3/2,1/2\n1,2,3/2,1/2\n");
  EXPECT_THROW(lly::curvature_report(g, nullptr, {lly::CurvatureMode::comb, q(0), 1}), lly::EmbeddingError);
}

TEST(ReportProperty, IndependentOfThreadCount) {
  auto g = lly::random_connected(12, 6, 77).graph;
  auto one = lly::to_json(lly::curvature_report(g, nullptr, {lly::CurvatureMode::zero, q(0), 1}), g).dump();
  auto four = lly::to_json(lly::curvature_report(g, nullptr, {lly::CurvatureMode::zero, q(0), 4}), g).dump();
  EXPECT_EQ(one, four);
}

TEST(Verify, Figure1PassesEverything) {
  auto fam = lly::figure1();
  auto r = lly::run_checks(fam.graph, &*fam.rotation, {});
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(r.checks.size(), lly::all_checks().size());
  EXPECT_TRUE(find(r, "degree-audit").applicable);
  EXPECT_TRUE(find(r, "gauss-bonnet").applicable);
}

TEST(Verify, StarFailsInequalityCheck) {
  auto g = lly::star_with_pendants().graph;
  lly::VerifyOptions opt;
  opt.checks = {"neighborhood"};
  auto r = lly::run_checks(g, nullptr, opt);
  EXPECT_FALSE(r.passed());
  const auto& c = find(r, "neighborhood");
  ASSERT_TRUE(c.data.contains("instances"));
  EXPECT_TRUE(c.data["instances"][0]["kappa_confirmed_nonpositive"].get<bool>());
}

TEST(Verify, TriangleGaussBonnet) {
  auto fam = lly::complete(3);
  lly::VerifyOptions opt;
  opt.checks = {"gauss-bonnet"};
  auto r = lly::run_checks(fam.graph, &*fam.rotation, opt);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(find(r, "gauss-bonnet").data["sum_phi"], "2");
}

TEST(Verify, InapplicableChecksPass) {
  auto g = lly::cycle(6).graph;
  lly::VerifyOptions opt;
  opt.checks = {"floor", "diameter", "gauss-bonnet", "degree-audit"};
  auto r = lly::run_checks(g, nullptr, opt);
  for (const auto& c : r.checks) {
    EXPECT_FALSE(c.applicable) << c.name;
    EXPECT_TRUE(c.passed) << c.name;
  }
  opt.checks = {"positivity"};
  EXPECT_FALSE(lly::run_checks(g, nullptr, opt).passed());
}

TEST(Verify, NumberedNamesAreAliases) {
  lly::VerifyOptions opt;
  opt.checks = {"lemma3", "lemma4"};
  auto r = lly::run_checks(lly::complete(4).graph, nullptr, opt);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].name, "pair-reduction");
  EXPECT_EQ(r.checks[1].name, "neighborhood");
  EXPECT_TRUE(r.passed());
}

TEST(Verify, RejectsUnknownCheck) {
  lly::VerifyOptions opt;
  opt.checks = {"nonsense"};
  EXPECT_THROW(lly::run_checks(lly::complete(3).graph, nullptr, opt), std::invalid_argument);
}

TEST(VerifyProperty, GaussBonnetOnEveryFamilyEmbedding) {
  lly::VerifyOptions opt;
  opt.checks = {"gauss-bonnet"};
  for (const auto& fam : {lly::prism(9), lly::antiprism(7), lly::wheel(10), lly::icosahedron(), lly::apex_wheel(),
                          lly::hypercube(3), lly::cycle(8)}) {
    auto r = lly::run_checks(fam.graph, &*fam.rotation, opt);
    EXPECT_TRUE(r.passed()) << fam.name;
    EXPECT_TRUE(r.checks.front().applicable) << fam.name;
  }
}
