#include <gtest/gtest.h>

#include "knotcert/laurent.hpp"
#include "knotcert/linalg.hpp"

using namespace knotcert;

TEST(Laurent, ArithmeticAndPrinting) {
  const LaurentPoly1 one = t_power(0);
  const LaurentPoly1 p = (one + t_power(1)) * (one - t_power(1));
  EXPECT_EQ(p, one - t_power(2));
  EXPECT_EQ(to_string(one - t_power(1) + t_power(2)), "1*t^0 - 1*t^1 + 1*t^2");
  EXPECT_EQ(to_string(LaurentPoly1()), "0");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(t_power(-2) * t_power(2), one);
  EXPECT_EQ((one + t_power(1)).pow(3), one + t_power(1, 3) + t_power(2, 3) + t_power(3));
}

TEST(Laurent, TwoVariablePrinting) {
  EXPECT_EQ(to_string(LaurentPoly2(1)), "1");
  const LaurentPoly2 p{{{-4, 0}, -1}, {{-2, 0}, 2}, {{-2, 2}, 1}};
  EXPECT_EQ(to_string(p), "-1 * a^-4 z^0 + 2 * a^-2 z^0 + 1 * a^-2 z^2");
  EXPECT_EQ(p.degree_range(0), std::make_pair(-4, -2));
  EXPECT_EQ(p.degree_range(1), std::make_pair(0, 2));
  EXPECT_THROW(LaurentPoly2().degree_range(0), PreconditionError);
}

TEST(Laurent, EvaluateAndDerivative) {
  const LaurentPoly1 p = t_power(3, 2) - t_power(1) + t_power(0, 5);
  EXPECT_EQ(evaluate(p, 2), 19);
  EXPECT_EQ(evaluate(p, -1), 4);
  EXPECT_EQ(derivative(p), t_power(2, 6) - t_power(0));
  EXPECT_EQ(evaluate(t_power(-3), -1), -1);
  EXPECT_THROW(evaluate(t_power(-1), 2), PreconditionError);
}

TEST(Laurent, ExactDivision) {
  const LaurentPoly1 one = t_power(0);
  const LaurentPoly1 a = one + t_power(1, 2) - t_power(4);
  const LaurentPoly1 b = t_power(-1) - t_power(2, 3);
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_EQ(divide_exact(a * b, a), b);
  EXPECT_THROW(divide_exact(a + one, b), PreconditionError);
  EXPECT_THROW(divide_exact(a, LaurentPoly1()), PreconditionError);
  EXPECT_THROW(divide_exact(t_power(1), t_power(0, 2)), PreconditionError);
}

TEST(Linalg, DeterminantBareiss) {
  EXPECT_EQ(determinant(IntMatrix{}), 1);
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}), -30);
  // large entries stay exact
  const Integer big = Integer(1) << 80;
  EXPECT_EQ(determinant(IntMatrix{{big, 1}, {1, big}}), big * big - 1);
}

TEST(Linalg, Signature) {
  EXPECT_EQ(signature(IntMatrix{}), 0);
  EXPECT_EQ(signature(IntMatrix{{2, 1}, {1, 2}}), 2);
  EXPECT_EQ(signature(IntMatrix{{-2, 1}, {1, -2}}), -2);
  EXPECT_EQ(signature(IntMatrix{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(signature(IntMatrix{{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(signature(IntMatrix{{1, 0, 0}, {0, 0, 3}, {0, 3, 0}}), 1);
  EXPECT_EQ(signature(IntMatrix{{1, 2}, {2, 1}}), 0);
}

TEST(Linalg, SignatureInvariantUnderCongruence) {
  // P^T A P has the same signature for unimodular P.
  const IntMatrix a{{3, 1, 0, 2}, {1, -2, 1, 0}, {0, 1, 0, 1}, {2, 0, 1, -1}};
  const IntMatrix p{{1, 2, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, 3}, {0, 0, 0, 1}};
  IntMatrix pta(4, std::vector<Integer>(4, 0)), b(4, std::vector<Integer>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) pta[i][j] += p[k][i] * a[k][j];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) b[i][j] += pta[i][k] * p[k][j];
  EXPECT_EQ(signature(a), signature(b));
  EXPECT_EQ(determinant(a), determinant(b));
}
