#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"

using namespace qca;
using fixtures::var;

namespace {

// Visits every seed reachable by at most depth mutations, skipping immediate
// backtracks.
template <class Ring>
void walk(const QuantumSeed<Ring>& s, int depth, const std::function<void(const QuantumSeed<Ring>&)>& visit, int last = 0) {
  visit(s);
  if (depth == 0) return;
  for (int k = 1; k <= s.n(); ++k)
    if (k != last) walk(mutate(s, k), depth - 1, visit, k);
}

}  // namespace

TEST(Mutation, KroneckerGolden) {
  const auto lat = fixtures::kronecker();
  const auto s = initial_seed(lat, LaurentRing{});
  const auto l = lat.lambda;
  auto x = [&](IntVec e) { return FormalElement::monomial(LaurentRing{}, l, e); };
  EXPECT_EQ(var(mutate(s, 1), 1), x({-1, 2, 1, 0}) + x({-1, 0, 0, 0}));
  const auto s12 = mutate_sequence(s, {1, 2});
  EXPECT_EQ(var(s12, 2), x({0, -1, 0, 0}) + x({-2, 3, 2, 1}) +
                             x({-2, 1, 1, 1}).scaled(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)) +
                             x({-2, -1, 0, 1}));
  EXPECT_EQ(s12.btilde, (IntMatrix{{0, 2}, {-2, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(s12.history, (std::vector<int>{1, 2}));
}

TEST(Mutation, InvolutionWithinDistanceFour) {
  for (const auto& lat : {fixtures::kronecker(), fixtures::a2()}) {
    int seeds = 0;
    walk<LaurentRing>(initial_seed(lat, LaurentRing{}), 4, [&](const QuantumSeed<LaurentRing>& s) {
      ++seeds;
      for (int k = 1; k <= s.n(); ++k) EXPECT_EQ(mutate(mutate(s, k), k), s);
    });
    EXPECT_EQ(seeds, 1 + 2 + 2 + 2 + 2);
  }
}

TEST(Mutation, ClusterVariablesAreBarInvariant) {
  for (const auto& lat : {fixtures::kronecker(), fixtures::a2(), fixtures::a3()}) {
    walk<LaurentRing>(initial_seed(lat, LaurentRing{}), 4, [&](const QuantumSeed<LaurentRing>& s) {
      for (const auto& x : s.vars) EXPECT_EQ(bar(x), x);
    });
  }
}

TEST(Mutation, SeedsStayCompatible) {
  walk<LaurentRing>(initial_seed(fixtures::a3(), LaurentRing{}), 3, [&](const QuantumSeed<LaurentRing>& s) {
    const auto r = check_compatible(s.lambda, s.btilde);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.diagnostic, "D = I3");
    EXPECT_NO_THROW(check_quasi_commutation(s));
  });
}

TEST(Mutation, A2Pentagon) {
  const auto s = initial_seed(fixtures::a2(), LaurentRing{});
  auto cur = s;
  std::vector<FormalElement> seen;
  for (int i = 0; i < 10; ++i) {
    cur = mutate(cur, i % 2 + 1);
    seen.push_back(var(cur, i % 2 + 1));
  }
  EXPECT_EQ(cur, s);
  // Exactly five distinct exchangeable variables, including x1 and x2.
  std::vector<FormalElement> distinct;
  for (const auto& x : seen)
    if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
  EXPECT_EQ(distinct.size(), 5u);
}

TEST(Mutation, FrameEvaluationMatchesMutatedMonomials) {
  const auto lat = fixtures::kronecker();
  const auto s = initial_seed(lat, LaurentRing{});
  for (int k = 1; k <= 2; ++k) {
    const auto t = mutate(s, k);
    for (const IntVec& c : {IntVec{1, 0, 0, 0}, IntVec{0, 1, 0, 0}, IntVec{2, 1, 0, 1}, IntVec{1, 2, 1, 0}, IntVec{0, 3, -1, 2}}) {
      IntVec cc = c;
      if (k == 2) std::swap(cc[0], cc[1]);
      EXPECT_EQ(frame_eval(s, cc, k), normalized(cc, t.vars, t.lambda)) << vec_to_string(cc);
    }
  }
}

TEST(Mutation, DistanceOneMatchesCC) {
  const auto lat = fixtures::kronecker();
  for (fp_t p : {2u, 3u, 5u}) {
    const auto s = initial_seed(lat, SqrtField(p));
    const auto rq = rep_quiver(lat.quiver);
    EXPECT_EQ(var(mutate(s, 1), 1), cc(simple(p, rq, 0), lat));
    EXPECT_EQ(var(mutate(s, 2), 2), cc(simple(p, rq, 1), lat));
  }
}

TEST(Mutation, SpecializationCommutes) {
  const auto lat = fixtures::a3();
  const auto f = mutate_sequence(initial_seed(lat, LaurentRing{}), {2, 1, 3, 2});
  const auto g = mutate_sequence(initial_seed(lat, SqrtField(5)), {2, 1, 3, 2});
  for (int i = 1; i <= lat.m(); ++i) EXPECT_EQ(specialize(var(f, i), 5), var(g, i));
}

TEST(Mutation, Errors) {
  const auto s = initial_seed(fixtures::a2(), LaurentRing{});
  EXPECT_THROW(mutate(s, 3), InvalidInput);
  EXPECT_THROW(mutate(s, 0), InvalidInput);
}
