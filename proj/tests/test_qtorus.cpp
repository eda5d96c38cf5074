#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qca;

namespace {

auto lambda() { return std::make_shared<const IntMatrix>(fixtures::kronecker_lambda()); }

FormalElement mono(const std::shared_ptr<const IntMatrix>& l, IntVec e) { return FormalElement::monomial(LaurentRing{}, l, e); }

}  // namespace

TEST(Torus, MonomialProduct) {
  const auto l = lambda();
  const auto x1 = mono(l, {1, 0, 0, 0}), x3 = mono(l, {0, 0, 1, 0});
  // Lambda(e1, e3) = 1.
  EXPECT_EQ(x1 * x3, mono(l, {1, 0, 1, 0}).times_v_power(1));
  EXPECT_EQ(x3 * x1, mono(l, {1, 0, 1, 0}).times_v_power(-1));
  EXPECT_EQ(x1 * x3, (x3 * x1).times_v_power(2));
  EXPECT_EQ(mono(l, {1, -1, 0, 2}) * mono(l, {-1, 1, 0, -2}), x1.one_like());
}

TEST(Torus, PowAndZero) {
  const auto l = lambda();
  const auto x = mono(l, {1, 0, 0, 0}) + mono(l, {0, 1, 0, 0});
  EXPECT_EQ(x.pow(0), x.one_like());
  EXPECT_EQ(x.pow(2), x * x);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_THROW(x.pow(-1), InvalidInput);
}

TEST(Torus, DivideExactBothSides) {
  const auto l = lambda();
  const auto a = mono(l, {1, 0, 0, 0}) + mono(l, {0, 1, 1, 0}).times_v_power(3);
  const auto d = mono(l, {0, 0, 1, 0}) - mono(l, {0, 2, 0, 1});
  EXPECT_EQ(divide_exact(a * d, d, Side::Right), a);
  EXPECT_EQ(divide_exact(d * a, d, Side::Left), a);
  EXPECT_THROW(divide_exact(a + a.one_like(), d, Side::Right), NotExact);
  EXPECT_THROW(divide_exact(a, a.zero_like(), Side::Right), NotExact);
}

TEST(Torus, ContextMismatch) {
  const auto x = mono(lambda(), {1, 0, 0, 0});
  const auto y = mono(lambda(), {1, 0, 0, 0});
  EXPECT_THROW((void)(x * y), ContextMismatch);
  EXPECT_EQ(x, y.rebased(x.lambda()));
  EXPECT_THROW(mono(lambda(), {1, 0}), ContextMismatch);
}

TEST(Torus, NormalizedMonomialsAreBarInvariant) {
  const auto lat = fixtures::kronecker();
  const auto seed = initial_seed(lat, LaurentRing{});
  for (const IntVec& c : {IntVec{1, 0, 1, 0}, IntVec{2, 1, 0, 3}, IntVec{1, -1, 2, -1}, IntVec{0, 0, 0, 0}}) {
    const auto x = normalized(c, seed.vars, *lat.lambda);
    EXPECT_EQ(bar(x), x);
    EXPECT_EQ(x, FormalElement::monomial(LaurentRing{}, lat.lambda, c));
  }
}

TEST(Torus, TextRoundTrip) {
  const auto l = lambda();
  const auto x = mono(l, {1, 0, 0, 0}) - mono(l, {0, 1, 0, 0}) + mono(l, {0, 0, 0, 1}).scaled(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  EXPECT_EQ(parse_torus(x.to_string(), LaurentRing{}, l), x);
  const auto s = specialize(x, 3).times_v_power(-3);
  EXPECT_EQ(parse_torus(s.to_string(), SqrtField(3), l), s);
}

TEST(Torus, Specialize) {
  const auto l = lambda();
  const auto x = mono(l, {1, 0, 0, 0}).times_v_power(2);
  EXPECT_EQ(specialize(x, 2), SpecElement::monomial(SqrtField(2), l, {1, 0, 0, 0}).scaled(SqrtElement(2, 2)));
}
