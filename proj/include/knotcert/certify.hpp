#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "knotcert/braid.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/error.hpp"
#include "knotcert/homfly.hpp"
#include "knotcert/invariants.hpp"

namespace knotcert {

using Json = nlohmann::ordered_json;

inline constexpr int kCertificateSchemaVersion = 1;

// Rule identifiers as they appear in certificates.
inline constexpr const char* kRuleMontesinosKnot = "montesinos-knot";
inline constexpr const char* kRuleMontesinosLinkBridge = "montesinos-link-bridge";
inline constexpr const char* kRuleSeifertLinkTaxonomy = "seifert-link-taxonomy";
inline constexpr const char* kRuleTorusKnot = "torus-knot-det-genus";
inline constexpr const char* kRuleToroidalSlope = "toroidal-slope";

enum class Family { kOdd, kEven };

inline const char* to_string(Family f) { return f == Family::kOdd ? "odd" : "even"; }

struct SlopeCandidate {
  int r = 0;
  bool odd = false;
  std::string source_rule;
  friend bool operator==(const SlopeCandidate&, const SlopeCandidate&) = default;
};

enum class Conclusion { kExcluded, kInconclusive };

inline const char* to_string(Conclusion c) {
  return c == Conclusion::kExcluded ? "excluded" : "inconclusive";
}

struct ExclusionVerdict {
  std::string rule;
  Json evidence = Json::object();
  Conclusion conclusion = Conclusion::kInconclusive;

  bool excluded() const { return conclusion == Conclusion::kExcluded; }
  friend bool operator==(const ExclusionVerdict&, const ExclusionVerdict&) = default;
};

struct SlopeReport {
  int r = 0;
  std::vector<ExclusionVerdict> verdicts;

  bool has_excluded(std::string_view rule) const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [&](const ExclusionVerdict& v) { return v.rule == rule && v.excluded(); });
  }
  friend bool operator==(const SlopeReport&, const SlopeReport&) = default;
};

struct CertificateReport {
  int schema_version = kCertificateSchemaVersion;
  Family family = Family::kOdd;
  /// {p, q} for the odd family, {2n, q} for the even family.
  std::pair<int, int> parameters{0, 0};
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  std::vector<SlopeReport> slopes;
  bool certified = false;

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

// ---------------------------------------------------------------------------
// Slope restrictions

/// Integral slopes with |r| <= 8. Non-integral slopes are ruled out once per
/// report because the knot is alternating.
inline std::vector<SlopeCandidate> slope_candidates_odd(int p, int q) {
  detail::require_odd_at_least_3(p, "p");
  detail::require_odd_at_least_3(q, "q");
  std::vector<SlopeCandidate> out;
  for (int r = -8; r <= 8; ++r) out.push_back({r, r % 2 != 0, "integral-slope-bound"});
  return out;
}

/// The cyclic-period restriction r = 4q -/+ 1.
inline std::vector<SlopeCandidate> slope_candidates_even(int n, int q) {
  detail::require(n >= 1, "n must be >= 1");
  detail::require_odd_at_least_3(q, "q");
  return {{4 * q - 1, true, "cyclic-period-factor-torus-knot"},
          {4 * q + 1, true, "cyclic-period-factor-torus-knot"}};
}

inline long homology_order(int r) { return std::abs(r); }

// ---------------------------------------------------------------------------
// Montesinos knot rule

/// Evidence for the sharp-move chain
///   s(K) + sigma(K) >= s(K') + sigma(K') + (s-delta) - (max sigma jump).
struct SharpChainEvidence {
  long partner_sum_lower = 0;  // lower bound for s(K') + sigma(K')
  long s_delta = sharp_move_s_delta();
  int d0_components = 2;
};

inline long sharp_chain_lower_bound(const SharpChainEvidence& e) {
  // sigma(K) >= sigma(K') - (upper end of the jump interval relative to sigma(K)).
  const IntInterval jump = sharp_move_sigma_bound(0, e.d0_components);
  return e.partner_sum_lower + e.s_delta - jump.hi();
}

/// |s + sigma| >= 4 excludes Montesinos knots. Intervals certify s and
/// sigma; the rule fires when the whole sum interval lies at or beyond +/-4.
inline ExclusionVerdict exclude_montesinos_knot(const IntInterval& s, const IntInterval& sigma) {
  const IntInterval sum = s + sigma;
  ExclusionVerdict v;
  v.rule = kRuleMontesinosKnot;
  v.evidence["s"] = {s.lo(), s.hi()};
  v.evidence["sigma"] = {sigma.lo(), sigma.hi()};
  v.evidence["sum_bound"] = {sum.lo(), sum.hi()};
  v.conclusion = sum.lo() >= 4 || sum.hi() <= -4 ? Conclusion::kExcluded : Conclusion::kInconclusive;
  return v;
}

inline ExclusionVerdict exclude_montesinos_knot(long s, long sigma) {
  detail::require_even(s, "s");
  detail::require_even(sigma, "sigma");
  return exclude_montesinos_knot(IntInterval::exactly(s), IntInterval::exactly(sigma));
}

inline ExclusionVerdict exclude_montesinos_knot(const SharpChainEvidence& e) {
  detail::require_even(e.partner_sum_lower, "partner s + sigma");
  ExclusionVerdict v;
  v.rule = kRuleMontesinosKnot;
  const long bound = sharp_chain_lower_bound(e);
  v.evidence["chain"] = {{"partner_sum_lower", e.partner_sum_lower},
                         {"s_delta", e.s_delta},
                         {"d0_components", e.d0_components},
                         {"sum_lower_bound", bound}};
  v.conclusion = bound >= 4 ? Conclusion::kExcluded : Conclusion::kInconclusive;
  return v;
}

/// Runs the sharp-move chain and the direct computation on a quotient knot
/// and its partner; both are recorded and both must reach the threshold.
inline ExclusionVerdict exclude_montesinos_knot(const BraidWord& quotient, const BraidWord& partner) {
  ExclusionVerdict v;
  v.rule = kRuleMontesinosKnot;
  const LinkDiagram d = braid_closure(quotient);
  const LinkDiagram dp = braid_closure(partner);
  const bool knots = component_count(d) == 1 && component_count(dp) == 1;
  if (!knots || !is_positive(d) || !is_positive(dp)) {
    v.evidence["failed_step"] = "quotient and partner must be positive knot diagrams";
    return v;
  }
  const long s = rasmussen_positive(d);
  const long s_partner = rasmussen_positive(dp);
  const long sigma = signature(d);
  const long sigma_partner = signature(dp);
  const bool move_shape = d.crossing_count() == dp.crossing_count() + 8 &&
                          seifert_circle_count(d) == seifert_circle_count(dp);

  // Positivity of K' gives s(K') + sigma(K') >= 0.
  const ExclusionVerdict chain = exclude_montesinos_knot(SharpChainEvidence{0, s - s_partner, 2});
  const ExclusionVerdict direct = exclude_montesinos_knot(s, sigma);

  v.evidence["chain"] = chain.evidence["chain"];
  v.evidence["chain"]["crossings"] = {d.crossing_count(), dp.crossing_count()};
  v.evidence["chain"]["seifert_circles"] = {seifert_circle_count(d), seifert_circle_count(dp)};
  v.evidence["chain"]["partner_positive"] = true;
  v.evidence["direct"] = {{"s", s},
                          {"sigma", sigma},
                          {"sum", s + sigma},
                          {"partner_s", s_partner},
                          {"partner_sigma", sigma_partner},
                          {"partner_sum", s_partner + sigma_partner}};
  if (!move_shape || s - s_partner != sharp_move_s_delta()) {
    v.evidence["failed_step"] = "partner is not a sharp-move partner (c - 8, same O)";
    return v;
  }
  v.conclusion = chain.excluded() && direct.excluded() ? Conclusion::kExcluded
                                                       : Conclusion::kInconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// Two-component quotient links (odd family, even r)

/// Components T(2,q) and T(2,2p+q); each nontrivial forces bridge index >= 4,
/// beyond the bound 3 for Montesinos links of length three.
inline ExclusionVerdict exclude_montesinos_link_two_components(int p, int q) {
  ExclusionVerdict v;
  v.rule = kRuleMontesinosLinkBridge;
  const int a = q, b = 2 * p + q;
  v.evidence["components"] = {"T(2," + std::to_string(a) + ")", "T(2," + std::to_string(b) + ")"};
  const bool nontrivial = std::abs(a) >= 3 && std::abs(b) >= 3;
  v.evidence["components_nontrivial"] = nontrivial;
  v.evidence["bridge_lower"] = nontrivial ? 4 : 2;
  v.evidence["montesinos_bridge_upper"] = 3;
  v.conclusion = nontrivial ? Conclusion::kExcluded : Conclusion::kInconclusive;
  return v;
}

/// Seifert links with two components are torus links (parallel components)
/// or a torus knot with a core (one trivial component).
inline ExclusionVerdict exclude_seifert_link_two_components(int p, int q) {
  ExclusionVerdict v;
  v.rule = kRuleSeifertLinkTaxonomy;
  const int a = q, b = 2 * p + q;
  const bool nontrivial = std::abs(a) >= 3 && std::abs(b) >= 3;
  const bool parallel = std::abs(a) == std::abs(b);
  v.evidence["components"] = {"T(2," + std::to_string(a) + ")", "T(2," + std::to_string(b) + ")"};
  v.evidence["rules_out"] = Json::object({{"S1", "two components"},
                                          {"S2", parallel ? "not ruled out" : "components not parallel"},
                                          {"S3", nontrivial ? "no trivial component" : "not ruled out"}});
  v.conclusion = !parallel && nontrivial ? Conclusion::kExcluded : Conclusion::kInconclusive;
  return v;
}

/// Adds the diagram-level check that the closure really has the two
/// components claimed, identified by their determinants.
inline void attach_component_evidence(ExclusionVerdict& v, const BraidWord& quotient, int p, int q) {
  const LinkDiagram d = braid_closure(quotient);
  const int comps = component_count(d);
  v.evidence["computed_components"] = comps;
  if (comps != 2) {
    v.evidence["failed_step"] = "closure is not a two-component link";
    v.conclusion = Conclusion::kInconclusive;
    return;
  }
  std::vector<long> dets;
  for (int k = 0; k < 2; ++k) dets.push_back(determinant(component_diagram(d, k)).convert_to<long>());
  std::sort(dets.begin(), dets.end());
  v.evidence["component_determinants"] = dets;
  std::vector<long> expected{std::abs(q), std::abs(2 * p + q)};
  std::sort(expected.begin(), expected.end());
  if (dets != expected) {
    v.evidence["failed_step"] = "component determinants do not match T(2,q), T(2,2p+q)";
    v.conclusion = Conclusion::kInconclusive;
  }
}

// ---------------------------------------------------------------------------
// Torus knot rule

/// Generic form: a positive 4-braid with a conjugate containing a full
/// twist has braid index 4, and MFW must agree. The only torus knots left
/// are T(4,x); the determinant pins x to the homology order and the genus
/// must then match 3(x-1)/2.
inline ExclusionVerdict exclude_torus_knot(const BraidWord& quotient, long homology) {
  ExclusionVerdict v;
  v.rule = kRuleTorusKnot;
  auto fail = [&](const std::string& step) {
    v.evidence["failed_step"] = step;
    v.conclusion = Conclusion::kInconclusive;
    return v;
  };
  if (quotient.strands() != 4 || !quotient.is_positive())
    return fail("braid-index: quotient must be a positive 4-braid");
  const long inf = normal_form(quotient).infimum;
  const long summit = summit_infimum(quotient);
  const long mfw = mfw_bound(homfly(quotient));
  v.evidence["braid_index"] = {{"infimum", inf},
                               {"summit_infimum", summit},
                               {"full_twist_in_conjugate", summit >= 2},
                               {"mfw_bound", mfw}};
  if (summit < 2) return fail("braid-index: no conjugate contains a full twist");
  if (mfw != 4) return fail("braid-index: MFW bound differs from 4");

  const LinkDiagram d = braid_closure(quotient);
  if (component_count(d) != 1) return fail("determinant: closure is not a knot");
  const long det = determinant(d).convert_to<long>();
  v.evidence["determinant"] = {{"det", det}, {"homology_order", homology}};
  if (det != homology) return fail("determinant: det differs from |H_1|");
  const long x = det;
  if (x % 2 == 0 || x < 1) return fail("determinant: T(4,x) needs odd x");

  const long genus = positive_genus(d);
  const long torus = torus_genus(4, static_cast<int>(x));
  v.evidence["genus"] = {{"knot", genus}, {"torus", torus}, {"x", x}};
  v.conclusion = genus != torus ? Conclusion::kExcluded : Conclusion::kInconclusive;
  return v;
}

inline ExclusionVerdict exclude_torus_knot(Family family, int first, int q, int r) {
  if (family == Family::kOdd) {
    ExclusionVerdict v = exclude_torus_knot(quotient_braid_odd(first, q, r), homology_order(r));
    const long formula = genus_Ko(first, q, r);
    v.evidence["genus_formula"] = formula;
    if (v.evidence.contains("genus") && v.evidence["genus"]["knot"] != formula) {
      v.evidence["failed_step"] = "genus formula disagrees with the diagram";
      v.conclusion = Conclusion::kInconclusive;
    }
    return v;
  }
  const int n = first / 2;
  ExclusionVerdict v = exclude_torus_knot(quotient_braid_even(n, q, r), homology_order(r));
  const long formula = genus_Ke(n, q, r);
  const long lhs = 6L * n - 3L * q;
  const long forbidden = r == 4 * q + 1 ? 1 : -1;
  v.evidence["genus_formula"] = formula;
  v.evidence["parity"] = {{"6n-3q", lhs}, {"required_for_torus", forbidden}, {"holds", lhs == forbidden}};
  if (v.evidence.contains("genus") && v.evidence["genus"]["knot"] != formula) {
    v.evidence["failed_step"] = "genus formula disagrees with the diagram";
    v.conclusion = Conclusion::kInconclusive;
  }
  if (lhs == forbidden) v.conclusion = Conclusion::kInconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// Pipeline

namespace detail {

inline ExclusionVerdict toroidal_slope_verdict() {
  ExclusionVerdict v;
  v.rule = kRuleToroidalSlope;
  v.evidence["reason"] = "genus-one knot: 0-surgery contains an essential torus";
  v.conclusion = Conclusion::kExcluded;
  return v;
}

inline bool slope_closed(const SlopeReport& s) {
  if (s.has_excluded(kRuleToroidalSlope)) return true;
  const bool montesinos = s.has_excluded(kRuleMontesinosKnot) || s.has_excluded(kRuleMontesinosLinkBridge);
  const bool seifert = s.has_excluded(kRuleTorusKnot) || s.has_excluded(kRuleSeifertLinkTaxonomy);
  return montesinos && seifert;
}

inline SlopeReport certify_slope_odd(int p, int q, int r) {
  SlopeReport s{r, {}};
  if (r == 0) {
    s.verdicts.push_back(toroidal_slope_verdict());
    return s;
  }
  if (r % 2 == 0) {
    const BraidWord quotient = quotient_braid_odd(p, q, r);
    ExclusionVerdict bridge = exclude_montesinos_link_two_components(p, q);
    attach_component_evidence(bridge, quotient, p, q);
    ExclusionVerdict taxonomy = exclude_seifert_link_two_components(p, q);
    attach_component_evidence(taxonomy, quotient, p, q);
    s.verdicts.push_back(std::move(bridge));
    s.verdicts.push_back(std::move(taxonomy));
    return s;
  }
  s.verdicts.push_back(exclude_montesinos_knot(quotient_braid_odd(p, q, r), sharp_partner_odd(p, q, r)));
  s.verdicts.push_back(exclude_torus_knot(Family::kOdd, p, q, r));
  return s;
}

inline SlopeReport certify_slope_even(int n, int q, int r) {
  SlopeReport s{r, {}};
  s.verdicts.push_back(exclude_montesinos_knot(quotient_braid_even(n, q, r), sharp_partner_even(n, q, r)));
  s.verdicts.push_back(exclude_torus_knot(Family::kEven, 2 * n, q, r));
  return s;
}

}  // namespace detail

/// Certificate that P(first, q, q) has no Seifert fibered surgery, for
/// first >= 2 and odd q >= 3. Odd `first` uses the integral slopes with
/// |r| <= 8; even `first` = 2n uses r = 4q -/+ 1.
inline CertificateReport certify_no_sfs(int first, int q) {
  if (first < 2) throw PreconditionError("first pretzel parameter must be >= 2");
  if (q < 3 || q % 2 == 0)
    throw PreconditionError("q must be odd and >= 3 (even q gives a link)");
  CertificateReport rep;
  rep.parameters = {first, q};
  rep.family = first % 2 == 1 ? Family::kOdd : Family::kEven;
  rep.assumptions = {
      "K = P(p,q,q) is hyperbolic and strongly invertible",
      "a Seifert fibered K(r) is atoroidal with base orbifold S^2 and exactly three exceptional fibers",
      "if K(r) = M_2(L_r) is Seifert fibered then L_r is a Seifert link or a Montesinos link",
      "det(L_r) = |H_1(K(r))| since K(r) is the double branched cover of L_r",
  };
  if (rep.family == Family::kOdd) {
    const int p = first;
    detail::require_odd_at_least_3(p, "p");
    rep.notes.push_back("non-integral slopes excluded: K is alternating, so Seifert fibered slopes are integral");
    rep.notes.push_back("|r| <= 8: the 0-surgery is exceptional (toroidal), bounding exceptional integral slopes");
    for (const auto& c : slope_candidates_odd(p, q)) rep.slopes.push_back(detail::certify_slope_odd(p, q, c.r));
  } else {
    const int n = first / 2;
    rep.notes.push_back("slopes restricted to r = 4q -/+ 1: cyclic period 2 with factor knot T(2,q)");
    rep.notes.push_back("all candidate slopes are odd, so every quotient is a knot; no link case arises");
    for (const auto& c : slope_candidates_even(n, q)) rep.slopes.push_back(detail::certify_slope_even(n, q, c.r));
  }
  std::sort(rep.slopes.begin(), rep.slopes.end(),
            [](const SlopeReport& a, const SlopeReport& b) { return a.r < b.r; });
  rep.certified = std::all_of(rep.slopes.begin(), rep.slopes.end(), detail::slope_closed);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const CertificateReport& rep) {
  Json j;
  j["schema_version"] = rep.schema_version;
  j["family"] = to_string(rep.family);
  j["parameters"] = rep.family == Family::kOdd
                        ? Json{{"p", rep.parameters.first}, {"q", rep.parameters.second}}
                        : Json{{"p", rep.parameters.first}, {"n", rep.parameters.first / 2},
                               {"q", rep.parameters.second}};
  j["assumptions"] = rep.assumptions;
  j["notes"] = rep.notes;
  j["slopes"] = Json::array();
  for (const auto& s : rep.slopes) {
    Json sj;
    sj["r"] = s.r;
    sj["verdicts"] = Json::array();
    for (const auto& v : s.verdicts)
      sj["verdicts"].push_back({{"rule", v.rule}, {"evidence", v.evidence}, {"conclusion", to_string(v.conclusion)}});
    j["slopes"].push_back(std::move(sj));
  }
  j["conclusion"] = rep.certified ? "certified" : "inconclusive";
  return j;
}

inline CertificateReport report_from_json(const Json& j) {
  try {
    CertificateReport rep;
    rep.schema_version = j.at("schema_version").get<int>();
    if (rep.schema_version != kCertificateSchemaVersion)
      throw MalformedInput("unsupported certificate schema version " + std::to_string(rep.schema_version));
    const auto family = j.at("family").get<std::string>();
    if (family != "odd" && family != "even") throw MalformedInput("unknown family '" + family + "'");
    rep.family = family == "odd" ? Family::kOdd : Family::kEven;
    rep.parameters = {j.at("parameters").at("p").get<int>(), j.at("parameters").at("q").get<int>()};
    rep.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& sj : j.at("slopes")) {
      SlopeReport s{sj.at("r").get<int>(), {}};
      for (const auto& vj : sj.at("verdicts")) {
        ExclusionVerdict v;
        v.rule = vj.at("rule").get<std::string>();
        v.evidence = vj.at("evidence");
        const auto c = vj.at("conclusion").get<std::string>();
        if (c != "excluded" && c != "inconclusive") throw MalformedInput("unknown conclusion '" + c + "'");
        v.conclusion = c == "excluded" ? Conclusion::kExcluded : Conclusion::kInconclusive;
        s.verdicts.push_back(std::move(v));
      }
      rep.slopes.push_back(std::move(s));
    }
    const auto conclusion = j.at("conclusion").get<std::string>();
    rep.certified = conclusion == "certified";
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace knotcert
