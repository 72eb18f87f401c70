#include <gtest/gtest.h>

#include "knotcert/invariants.hpp"

using namespace knotcert;

TEST(Torus, AlexanderPolynomial) {
  const LaurentPoly1 one = t_power(0);
  EXPECT_EQ(torus_alexander(2, 3), one - t_power(1) + t_power(2));
  EXPECT_EQ(torus_alexander(3, 4), torus_alexander(4, 3));
  EXPECT_EQ(det_from_alexander(torus_alexander(2, 7)), 7);
  EXPECT_EQ(det_from_alexander(torus_alexander(3, 5)), 1);
  EXPECT_EQ(torus_alexander(1, 5), one);
  EXPECT_THROW(torus_alexander(4, 6), PreconditionError);
  EXPECT_THROW(torus_alexander(0, 3), PreconditionError);
}

TEST(Torus, DeterminantOfT4x) {
  for (int x = 1; x <= 21; x += 2) {
    const auto [df, dg] = torus_det_4x_lhopital(x);
    EXPECT_EQ(df, 8 * x);
    EXPECT_EQ(dg, 8);
    EXPECT_EQ(torus_det_4x(x), x);
    EXPECT_EQ(det_from_alexander(torus_alexander(4, x)), x);
  }
  EXPECT_THROW(torus_det_4x(4), PreconditionError);
  EXPECT_THROW(torus_det_4x(-3), PreconditionError);
}

TEST(Torus, Genus) {
  EXPECT_EQ(torus_genus(4, 7), 9);
  EXPECT_EQ(torus_genus(2, 3), 1);
  EXPECT_EQ(torus_genus(3, 5), 4);
  for (int x = 1; x <= 15; x += 2) EXPECT_EQ(torus_genus(4, x), 3 * (x - 1) / 2);
  EXPECT_THROW(torus_genus(4, 2), PreconditionError);
  EXPECT_EQ(positive_genus(braid_closure(torus_braid(4, 7))), 9);
}

TEST(Positive, GenusAndRasmussen) {
  const LinkDiagram t = braid_closure(BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(positive_genus(t), 1);
  EXPECT_EQ(rasmussen_positive(t), 2);
  EXPECT_EQ(rasmussen_from_formula(mirror(t)), -2);
  EXPECT_THROW(positive_genus(mirror(t)), PreconditionError);
  EXPECT_THROW(positive_genus(braid_closure(BraidWord(2, {1, 1}))), PreconditionError);
  EXPECT_THROW(rasmussen_from_formula(braid_closure(BraidWord(3, {1, -2, 1, -2}))), PreconditionError);
  const LinkDiagram ko = braid_closure(quotient_braid_odd(3, 3, -7));
  EXPECT_EQ(positive_genus(ko), 13);
  EXPECT_EQ(rasmussen_positive(ko), 26);
}

TEST(Positive, TorusKnotsOfTypeTwoAreSigmaBalanced) {
  for (int q : {3, 5, 7, 9, 11}) {
    const LinkDiagram d = braid_closure(torus_braid(2, q));
    EXPECT_EQ(rasmussen_from_formula(d) + signature(d), 0);
    const LinkDiagram m = mirror(d);
    EXPECT_EQ(rasmussen_from_formula(m) + signature(m), 0);
  }
}

TEST(Families, GenusFormulasMatchDiagrams) {
  for (int p : {3, 5, 7})
    for (int q : {3, 5, 7})
      for (int r = -7; r <= 7; r += 2)
        EXPECT_EQ(genus_Ko(p, q, r), positive_genus(braid_closure(quotient_braid_odd(p, q, r))));
  for (int n : {1, 2, 3})
    for (int q : {3, 5})
      for (int r : {4 * q - 1, 4 * q + 1})
        EXPECT_EQ(genus_Ke(n, q, r), positive_genus(braid_closure(quotient_braid_even(n, q, r))));
  EXPECT_EQ(genus_Ko(3, 3, -7), 13);
  EXPECT_THROW(genus_Ko(3, 3, 2), PreconditionError);
  EXPECT_THROW(genus_Ke(1, 3, 12), PreconditionError);
  EXPECT_THROW(genus_Ke(0, 3, 11), PreconditionError);
}

TEST(Intervals, Construction) {
  EXPECT_THROW(IntInterval(1, 4), PreconditionError);
  EXPECT_THROW(IntInterval(4, 2), PreconditionError);
  const IntInterval a(-2, 4), b = IntInterval::exactly(6);
  EXPECT_EQ(a + b, IntInterval(4, 10));
  EXPECT_EQ(-a, IntInterval(-4, 2));
  EXPECT_EQ(a.width(), 6);
  EXPECT_TRUE(a.contains(0));
  EXPECT_FALSE(a.contains(6));
  std::ostringstream os;
  os << a;
  EXPECT_EQ(os.str(), "[-2, 4]");
}

TEST(Intervals, CrossingChangeAndSharpMove) {
  EXPECT_EQ(crossing_change_sigma_bound(-4L), IntInterval(-4, -2));
  EXPECT_EQ(crossing_change_s_bound(2L), IntInterval(2, 4));
  EXPECT_EQ(crossing_change_sigma_bound(IntInterval(-4, 0)), IntInterval(-4, 2));
  EXPECT_THROW(crossing_change_sigma_bound(3L), PreconditionError);
  EXPECT_EQ(sharp_move_sigma_bound(-10, 2), IntInterval(-8, -6));
  EXPECT_EQ(sharp_move_sigma_bound(-10, 1), IntInterval(-8, -4));
  EXPECT_THROW(sharp_move_sigma_bound(-10, 3), PreconditionError);
  EXPECT_EQ(sharp_move_s_delta(), 8);
}

// The cited sharp-move bounds, checked on the constructed partners. The
// partner's diagram D_0 here may have one component, so the wide interval
// is the one that applies.
TEST(Intervals, SharpMoveOnQuotientFamilies) {
  for (int p : {3, 5, 7})
    for (int q : {3, 5, 7})
      for (int r = -7; r <= 7; r += 2) {
        const LinkDiagram k = braid_closure(quotient_braid_odd(p, q, r));
        const LinkDiagram kp = braid_closure(sharp_partner_odd(p, q, r));
        EXPECT_EQ(rasmussen_positive(k) - rasmussen_positive(kp), sharp_move_s_delta());
        EXPECT_TRUE(sharp_move_sigma_bound(signature(k), 1).contains(signature(kp)));
      }
}

TEST(Record, ReportsUnavailableFields) {
  const InvariantRecord t = invariant_record(braid_closure(BraidWord(2, {1, 1, 1})));
  EXPECT_EQ(t.s, 2);
  EXPECT_EQ(t.sigma, -2);
  EXPECT_EQ(t.det, 3);
  EXPECT_EQ(t.genus, 1);
  EXPECT_TRUE(t.notes.empty());
  const InvariantRecord f = invariant_record(braid_closure(BraidWord(3, {1, -2, 1, -2})));
  EXPECT_FALSE(f.s);
  EXPECT_EQ(f.sigma, 0);
  EXPECT_EQ(f.notes.size(), 3U);
  const InvariantRecord l = invariant_record(braid_closure(BraidWord(2, {1, 1})));
  EXPECT_EQ(l.components, 2);
  EXPECT_FALSE(l.sigma);
  const InvariantRecord u = invariant_record(LinkDiagram());
  EXPECT_EQ(u.s, 0);
  EXPECT_EQ(u.det, 1);
}
