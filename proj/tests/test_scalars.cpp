#include <gtest/gtest.h>

#include "qca/scalars.hpp"

using namespace qca;

namespace {

LaurentPoly v(int k, long c = 1) { return LaurentPoly::monomial(k, mpz_class(c)); }

}  // namespace

TEST(Laurent, Arithmetic) {
  const LaurentPoly a = v(1) + v(-1);
  EXPECT_EQ(a * a, v(2) + v(0, 2) + v(-2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.min_degree(), -1);
  EXPECT_EQ(a.max_degree(), 1);
  EXPECT_EQ((a * a).coefficient(0), 2);
}

TEST(Laurent, BarAndUnits) {
  EXPECT_EQ(bar(v(3, 2) - v(-1)), v(-3, 2) - v(1));
  EXPECT_TRUE(v(5, -1).is_unit());
  EXPECT_FALSE(v(5, 2).is_unit());
  EXPECT_EQ(v(5, -1).inverse(), v(-5, -1));
  EXPECT_THROW(v(1, 3).inverse(), NotInvertible);
}

TEST(Laurent, DivideExact) {
  const LaurentPoly a = v(2) - v(-2);
  const LaurentPoly b = v(1) - v(-1);
  EXPECT_EQ(LaurentPoly::divide_exact(a, b), v(1) + v(-1));
  EXPECT_THROW(LaurentPoly::divide_exact(v(0) + v(1), v(0, 2)), NotExact);
  EXPECT_THROW(LaurentPoly::divide_exact(v(0), LaurentPoly{}), NotExact);
}

TEST(Laurent, TextRoundTrip) {
  for (const auto& x : {v(3, 2) - v(-1), v(0, -7), v(1) + v(-1), LaurentPoly{}}) EXPECT_EQ(parse_laurent(x.to_string()), x);
  EXPECT_EQ(parse_laurent("v + v^-1"), v(1) + v(-1));
}

TEST(Sqrt, PowersOfV) {
  const SqrtField f(2);
  EXPECT_EQ(f.v_power(2), f.from_integer(2));
  EXPECT_EQ(f.v_power(1) * f.v_power(1), f.from_integer(2));
  EXPECT_EQ(f.v_power(-3), SqrtElement(2, 0, mpq_class(1, 4)));
  EXPECT_EQ(f.v_power(-3) * f.v_power(3), f.one());
  EXPECT_EQ(ev(v(-3), 2), f.v_power(-3));
}

TEST(Sqrt, FieldOps) {
  const SqrtElement a(3, 2, 1);
  EXPECT_EQ(a * a.inverse(), SqrtElement(3, 1));
  EXPECT_EQ((a / a), SqrtElement(3, 1));
  EXPECT_THROW(SqrtElement(3, 0).inverse(), NotInvertible);
  EXPECT_EQ(parse_sqrt(a.to_string(), 3), a);
  EXPECT_EQ(parse_sqrt("1/2 - 3*s", 5), SqrtElement(5, mpq_class(1, 2), -3));
}

TEST(Sqrt, EvIsAHomomorphism) {
  const LaurentPoly a = v(3, 2) - v(-1), b = v(1) + v(-2, 5);
  for (std::int64_t q0 : {2, 3, 5}) {
    EXPECT_EQ(ev(a * b, q0), ev(a, q0) * ev(b, q0));
    EXPECT_EQ(ev(a + b, q0), ev(a, q0) + ev(b, q0));
  }
}

TEST(Primes, Small) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(QBinomial, Balanced) {
  const LaurentRing r;
  // [2 1]_v = v + v^-1, [3 1]_v = v^2 + 1 + v^-2.
  EXPECT_EQ(qbinom(r, 2, 1, v(1)), v(1) + v(-1));
  EXPECT_EQ(qbinom(r, 3, 1, v(1)), v(2) + v(0) + v(-2));
  EXPECT_EQ(qbinom(r, 4, 0, v(1)), v(0));
  EXPECT_TRUE(qbinom(r, 2, 3, v(1)).is_zero());
  // Balanced binomials are bar-invariant and specialize to v^{-k(n-k)} times
  // the number of k-subspaces of F_q^n.
  EXPECT_EQ(bar(qbinom(r, 5, 2, v(1))), qbinom(r, 5, 2, v(1)));
  const SqrtField f(2);
  EXPECT_EQ(qbinom(f, 3, 1, f.v_power(1)) * f.v_power(2), f.from_integer(7));
}
