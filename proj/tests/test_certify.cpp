#include <future>

#include <gtest/gtest.h>

#include "knotcert/certify.hpp"

using namespace knotcert;

TEST(Slopes, Candidates) {
  const auto odd = slope_candidates_odd(3, 3);
  ASSERT_EQ(odd.size(), 17U);
  EXPECT_EQ(odd.front().r, -8);
  EXPECT_EQ(odd.back().r, 8);
  EXPECT_FALSE(odd[8].odd);
  const auto even = slope_candidates_even(2, 5);
  ASSERT_EQ(even.size(), 2U);
  EXPECT_EQ(even[0].r, 19);
  EXPECT_EQ(even[1].r, 21);
  EXPECT_THROW(slope_candidates_odd(3, 4), PreconditionError);
  EXPECT_EQ(homology_order(-7), 7);
}

TEST(MontesinosRule, Threshold) {
  EXPECT_TRUE(exclude_montesinos_knot(4L, 0L).excluded());
  EXPECT_TRUE(exclude_montesinos_knot(-2L, -2L).excluded());
  EXPECT_FALSE(exclude_montesinos_knot(2L, -2L).excluded());
  EXPECT_FALSE(exclude_montesinos_knot(IntInterval(2, 4), IntInterval::exactly(0)).excluded());
  EXPECT_TRUE(exclude_montesinos_knot(IntInterval(4, 8), IntInterval(0, 2)).excluded());
  EXPECT_THROW(exclude_montesinos_knot(3L, 0L), PreconditionError);
}

TEST(MontesinosRule, SharpChain) {
  EXPECT_EQ(sharp_chain_lower_bound({0, 8, 2}), 4);
  EXPECT_TRUE(exclude_montesinos_knot(SharpChainEvidence{0, 8, 2}).excluded());
  EXPECT_FALSE(exclude_montesinos_knot(SharpChainEvidence{0, 8, 1}).excluded());
  EXPECT_FALSE(exclude_montesinos_knot(SharpChainEvidence{-2, 8, 2}).excluded());
}

TEST(MontesinosRule, QuotientAndPartner) {
  const ExclusionVerdict v = exclude_montesinos_knot(quotient_braid_odd(3, 3, -7), sharp_partner_odd(3, 3, -7));
  EXPECT_TRUE(v.excluded());
  EXPECT_EQ(v.evidence["direct"]["s"], 26);
  EXPECT_EQ(v.evidence["chain"]["s_delta"], 8);
  // a partner that is not eight crossings shorter is rejected
  const ExclusionVerdict bad = exclude_montesinos_knot(quotient_braid_odd(3, 3, -7), quotient_braid_odd(3, 3, -5));
  EXPECT_FALSE(bad.excluded());
  EXPECT_TRUE(bad.evidence.contains("failed_step"));
}

TEST(LinkRules, TwoComponentQuotients) {
  ExclusionVerdict bridge = exclude_montesinos_link_two_components(3, 5);
  attach_component_evidence(bridge, quotient_braid_odd(3, 5, 4), 3, 5);
  EXPECT_TRUE(bridge.excluded());
  EXPECT_EQ(bridge.evidence["component_determinants"], Json::array({5, 11}));
  EXPECT_TRUE(exclude_seifert_link_two_components(3, 5).excluded());
  EXPECT_FALSE(exclude_seifert_link_two_components(0, 3).excluded()) << "parallel components";
  ExclusionVerdict wrong = exclude_montesinos_link_two_components(3, 5);
  attach_component_evidence(wrong, quotient_braid_odd(3, 5, 3), 3, 5);
  EXPECT_FALSE(wrong.excluded());
}

TEST(TorusRule, DoesNotFireOnTorusKnots) {
  EXPECT_FALSE(exclude_torus_knot(torus_braid(4, 3), 3).excluded());
  for (int x : {5, 7, 9, 11, 13}) {
    const ExclusionVerdict v = exclude_torus_knot(torus_braid(4, x), x);
    EXPECT_FALSE(v.excluded()) << "T(4," << x << ")";
    EXPECT_FALSE(v.evidence.contains("failed_step")) << v.evidence.dump();
    EXPECT_EQ(v.evidence["genus"]["knot"], v.evidence["genus"]["torus"]);
  }
}

TEST(TorusRule, FiresOnQuotients) {
  for (int r : {-7, -1, 3, 7}) EXPECT_TRUE(exclude_torus_knot(Family::kOdd, 3, 5, r).excluded());
  for (int n = 1; n <= 5; ++n)
    for (int q : {3, 5, 7})
      for (int r : {4 * q - 1, 4 * q + 1}) {
        const ExclusionVerdict v = exclude_torus_knot(Family::kEven, 2 * n, q, r);
        EXPECT_TRUE(v.excluded()) << v.evidence.dump();
        EXPECT_EQ(v.evidence["parity"]["holds"], false);
      }
}

TEST(TorusRule, RejectsWrongShapes) {
  EXPECT_FALSE(exclude_torus_knot(BraidWord(3, {1, 2, 1, 2}), 1).excluded());
  EXPECT_FALSE(exclude_torus_knot(BraidWord(4, {1, -2, 3}), 1).excluded());
  EXPECT_FALSE(exclude_torus_knot(torus_braid(4, 7), 5).excluded()) << "determinant mismatch";
}

TEST(Certify, TheoremInstances) {
  for (auto [first, q] : {std::pair{3, 3}, {5, 3}, {2, 3}, {4, 5}, {3, 7}, {6, 3}}) {
    const CertificateReport rep = certify_no_sfs(first, q);
    EXPECT_TRUE(rep.certified) << first << " " << q;
    for (const auto& s : rep.slopes) EXPECT_TRUE(detail::slope_closed(s)) << "r = " << s.r;
    EXPECT_TRUE(std::is_sorted(rep.slopes.begin(), rep.slopes.end(),
                               [](const SlopeReport& a, const SlopeReport& b) { return a.r < b.r; }));
  }
  const CertificateReport odd = certify_no_sfs(3, 3);
  EXPECT_EQ(odd.family, Family::kOdd);
  EXPECT_EQ(odd.slopes.size(), 17U);
  EXPECT_TRUE(odd.slopes[8].has_excluded(kRuleToroidalSlope));
  EXPECT_EQ(certify_no_sfs(2, 3).slopes.size(), 2U);
  EXPECT_FALSE(odd.assumptions.empty());
}

TEST(Certify, ParameterErrors) {
  EXPECT_THROW(certify_no_sfs(3, 2), PreconditionError);
  EXPECT_THROW(certify_no_sfs(1, 3), PreconditionError);
  EXPECT_THROW(certify_no_sfs(3, 1), PreconditionError);
}

TEST(Certify, ConcurrentRunsAgree) {
  auto a = std::async(std::launch::async, certify_no_sfs, 5, 5);
  auto b = std::async(std::launch::async, certify_no_sfs, 5, 5);
  EXPECT_EQ(a.get(), b.get());
}

TEST(Json, RoundTrip) {
  for (auto [first, q] : {std::pair{3, 5}, {4, 3}}) {
    const CertificateReport rep = certify_no_sfs(first, q);
    const Json j = to_json(rep);
    EXPECT_EQ(j["schema_version"], kCertificateSchemaVersion);
    EXPECT_EQ(j["conclusion"], "certified");
    EXPECT_EQ(report_from_json(Json::parse(j.dump())), rep);
    EXPECT_EQ(to_json(report_from_json(j)).dump(), j.dump());
  }
}

TEST(Json, MalformedReports) {
  Json j = to_json(certify_no_sfs(2, 3));
  Json bad = j;
  bad["schema_version"] = 99;
  EXPECT_THROW(report_from_json(bad), MalformedInput);
  bad = j;
  bad.erase("slopes");
  EXPECT_THROW(report_from_json(bad), MalformedInput);
  bad = j;
  bad["family"] = "neither";
  EXPECT_THROW(report_from_json(bad), MalformedInput);
  bad = j;
  bad["slopes"][0]["verdicts"][0]["conclusion"] = "maybe";
  EXPECT_THROW(report_from_json(bad), MalformedInput);
}
