#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qca;

namespace {

struct Kron : ::testing::Test {
  LatticeData lat = fixtures::kronecker();
  QuiverPtr q = rep_quiver(lat.quiver);
};

FqRep regular(fp_t p, QuiverPtr q, fp_t a, fp_t b) {
  FqRep r = rep_with_dims(p, q, {1, 1, 0, 0});
  r.maps[0](0, 0) = a;
  r.maps[1](0, 0) = b;
  return r;
}

}  // namespace

TEST_F(Kron, ProjectivesAndInjectives) {
  EXPECT_EQ(projective(2, q, 0).dims, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(projective(2, q, 1).dims, (std::vector<int>{2, 1, 0, 0}));
  EXPECT_EQ(projective(2, q, 2).dims, (std::vector<int>{1, 0, 1, 0}));
  EXPECT_EQ(projective(2, q, 3).dims, (std::vector<int>{2, 1, 0, 1}));
  EXPECT_EQ(injective(2, q, 0).dims, (std::vector<int>{1, 2, 1, 2}));
  EXPECT_EQ(injective(2, q, 1).dims, (std::vector<int>{0, 1, 0, 1}));
  for (int v = 0; v < 4; ++v) {
    EXPECT_TRUE(is_projective(projective(3, q, v)));
    EXPECT_TRUE(is_injective(injective(3, q, v)));
    EXPECT_TRUE(is_indecomposable(projective(3, q, v)));
    EXPECT_EQ(dim_hom(projective(3, q, v), injective(3, q, v)), 1);
  }
  EXPECT_FALSE(is_projective(simple(2, q, 1)));
}

TEST_F(Kron, HomExt) {
  const auto s1 = simple(2, q, 0), s2 = simple(2, q, 1);
  EXPECT_EQ(dim_hom(s1, s1), 1);
  EXPECT_EQ(dim_hom(s1, s2), 0);
  EXPECT_EQ(dim_ext(s2, s1), 2);
  EXPECT_EQ(dim_ext(s1, s2), 0);
  EXPECT_TRUE(is_rigid(s1));
  EXPECT_FALSE(is_rigid(direct_sum(s1, s2)));
  EXPECT_FALSE(is_rigid(regular(2, q, 1, 0)));
  EXPECT_EQ(dim_ext(regular(2, q, 1, 0), regular(2, q, 1, 0)), 1);
}

TEST_F(Kron, ExtensionClasses) {
  for (fp_t p : {2u, 3u}) {
    const auto mids = ext_middles(simple(p, q, 1), simple(p, q, 0));
    // Split class plus one class per point of P^1.
    EXPECT_EQ(mids.size(), static_cast<std::size_t>(p + 2));
    std::uint64_t total = 0;
    for (const auto& c : mids) total += c.count;
    EXPECT_EQ(total, static_cast<std::uint64_t>(p * p));
    const auto r = regular(p, q, 1, 1);
    EXPECT_EQ(epsilon(r, simple(p, q, 1), simple(p, q, 0)), p - 1);
  }
}

TEST_F(Kron, IsoClasses) {
  EXPECT_TRUE(is_iso(regular(3, q, 1, 2), regular(3, q, 2, 1)));
  EXPECT_FALSE(is_iso(regular(3, q, 1, 2), regular(3, q, 1, 1)));
  EXPECT_FALSE(is_iso(regular(3, q, 1, 0), regular(3, q, 0, 1)));
  EXPECT_TRUE(is_indecomposable(regular(3, q, 1, 2)));
  EXPECT_FALSE(is_indecomposable(regular(3, q, 0, 0)));
}

TEST_F(Kron, Grassmannians) {
  const auto r = regular(2, q, 1, 0);
  EXPECT_EQ(grassmannian_count(r, {0, 0, 0, 0}), 1u);
  EXPECT_EQ(grassmannian_count(r, {1, 0, 0, 0}), 1u);
  EXPECT_EQ(grassmannian_count(r, {0, 1, 0, 0}), 0u);
  EXPECT_EQ(grassmannian_count(r, {1, 1, 0, 0}), 1u);
  // Semisimple: all subspaces count.
  const auto s = power(simple(3, q, 0), 3);
  EXPECT_EQ(grassmannian_count(s, {1, 0, 0, 0}), 13u);
  EXPECT_EQ(gaussian_binomial_count(4, 2, 2), 35u);
}

TEST_F(Kron, HallNumbers) {
  const auto r = regular(2, q, 1, 1), s1 = simple(2, q, 0), s2 = simple(2, q, 1);
  EXPECT_EQ(hall_number(r, s2, s1), 1u);
  EXPECT_EQ(hall_number(r, s1, s2), 0u);
  EXPECT_EQ(hall_number(direct_sum(s1, s2), s1, s2), 1u);
}

TEST_F(Kron, TopSocle) {
  const auto p1 = projective(2, q, 1);
  EXPECT_EQ(top_vector(p1), (std::vector<int>{0, 1, 0, 0}));
  EXPECT_EQ(socle_vector(p1), (std::vector<int>{2, 0, 0, 0}));
}

TEST_F(Kron, SplitParts) {
  const auto m = direct_sum(direct_sum(projective(2, q, 2), regular(2, q, 1, 1)), injective(2, q, 1));
  const auto pp = split_projective_part(m);
  EXPECT_EQ(pp.multiplicities, (std::vector<int>{0, 0, 1, 0}));
  const auto ip = split_injective_part(m);
  EXPECT_EQ(ip.multiplicities, (std::vector<int>{0, 1, 0, 0}));
  EXPECT_TRUE(is_iso(pp.rest, direct_sum(regular(2, q, 1, 1), injective(2, q, 1))));
}

TEST_F(Kron, Catalog) {
  // By hand: 2 + 6 + 12 classes in total dimension 1, 2, 3.
  EXPECT_EQ(fixtures::modules(lat, 2, 3).size(), 20u);
}

TEST(Catalog, A2) {
  // min(a, b) + 1 classes per dimension vector (a, b).
  const auto lat = fixtures::a2();
  EXPECT_EQ(fixtures::modules(lat, 2, 3).size(), 12u);
  EXPECT_EQ(fixtures::modules(lat, 5, 3).size(), 12u);
}

TEST(Tau, A2) {
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(tau(projective(2, q, v)).is_zero());
  for (const auto& m : fixtures::modules(lat, 2, 2)) {
    if (!is_indecomposable(m) || is_projective(m)) continue;
    const auto t = tau(m);
    EXPECT_TRUE(is_iso(tau_inv(t), m)) << describe(m);
  }
}

TEST(Reflection, SinkSourceRoundTrip) {
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  ASSERT_TRUE(q->is_sink(0));
  for (const auto& m : fixtures::modules(lat, 3, 3)) {
    const auto r = reflect_at_sink(m, 0);
    const auto back = reflect_at_source(r, 0);
    // Round trip kills exactly the S_1 summands.
    const auto split = split_off(m, simple(3, q, 0));
    EXPECT_TRUE(is_iso(back, split.complement)) << describe(m);
  }
  EXPECT_THROW(reflect_at_sink(simple(3, q, 1), 1), InvalidInput);
}

TEST(Modules, Validation) {
  const auto q = rep_quiver(fixtures::a2().quiver);
  FqRep m = rep_with_dims(2, q, {1, 1, 0, 0});
  m.maps[0] = FpMat(2, 1, 2);
  EXPECT_THROW(m.validate(), InvalidInput);
  const auto other = rep_quiver(fixtures::kronecker().quiver);
  EXPECT_THROW(dim_hom(simple(2, q, 0), simple(2, other, 0)), ContextMismatch);
}
