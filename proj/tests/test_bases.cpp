#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"

using namespace qca;
using fixtures::var;

namespace {

// Exchangeable cluster variables of every seed within depth mutations.
std::vector<SpecElement> cluster_variables(const LatticeData& lat, fp_t p, int depth) {
  std::vector<SpecElement> out;
  std::function<void(const QuantumSeed<SqrtField>&, int, int)> walk = [&](const QuantumSeed<SqrtField>& s, int last, int left) {
    for (int i = 1; i <= lat.n(); ++i)
      if (std::find(out.begin(), out.end(), var(s, i)) == out.end()) out.push_back(var(s, i));
    if (left == 0) return;
    for (int k = 1; k <= lat.n(); ++k)
      if (k != last) walk(mutate(s, k), k, left - 1);
  };
  walk(initial_seed(lat, SqrtField(p)), 0, depth);
  return out;
}

bool member(const std::vector<BasisElement>& basis, const SpecElement& x) {
  return std::any_of(basis.begin(), basis.end(), [&](const BasisElement& b) { return b.value == x; });
}

}  // namespace

TEST(StandardMonomials, Values) {
  const auto lat = fixtures::kronecker();
  const auto q = rep_quiver(lat.quiver);
  const auto one = SpecElement::monomial(SqrtField(2), lat.lambda, {0, 0, 0, 0});
  EXPECT_EQ(standard_monomial({0, 0}, lat, 2), one);
  EXPECT_EQ(standard_monomial({1, 0}, lat, 2), cc(simple(2, q, 0), lat));
  EXPECT_EQ(standard_monomial({1, -1}, lat, 2), cc(simple(2, q, 0), lat) * cc_shifted({0, 1, 0, 0}, lat, 2));
  EXPECT_EQ(standard_monomial({-2, 0}, lat, 2), SpecElement::monomial(SqrtField(2), lat.lambda, {2, 0, 0, 0}));
  EXPECT_THROW(standard_monomial({1}, lat, 2), InvalidInput);
}

TEST(StandardMonomials, Triangular) {
  for (const auto& lat : {fixtures::kronecker(), fixtures::a2()}) {
    std::vector<BasisElement> elements;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        elements.push_back({"d " + vec_to_string({a, b}), IntVec{a, b}, std::nullopt, standard_monomial({a, b}, lat, 2)});
    const auto r = triangularity_check(elements, lat, *find_grading(lat));
    EXPECT_TRUE(r.ok) << (r.problems.empty() ? "" : r.problems.front());
    EXPECT_EQ(r.leading.size(), 25u);
  }
}

TEST(Kronecker, NamedElements) {
  const auto lat = fixtures::kronecker();
  const auto q = rep_quiver(lat.quiver);
  const auto basis = kronecker_basis(lat, 3, 2);
  ASSERT_EQ(basis.size(), 25u);
  auto at = [&](IntVec d) {
    for (const auto& b : basis)
      if (b.index == d) return b.value;
    throw std::runtime_error("missing " + vec_to_string(d));
  };
  const auto seed = initial_seed(lat, SqrtField(3));
  const auto xs1 = cc(simple(3, q, 0), lat), xs2 = cc(simple(3, q, 1), lat);
  EXPECT_EQ(at({1, 1}), xs1 * xs2 - (var(seed, 1) * var(seed, 2) * var(seed, 3)).times_v_power(-3));
  EXPECT_EQ(at({2, 2}), at({1, 1}).pow(2));
  EXPECT_EQ(at({-1, 0}), var(seed, 1));
  EXPECT_EQ(at({0, -1}), var(seed, 2));
  EXPECT_EQ(at({1, 0}), xs1);
  EXPECT_EQ(at({0, 0}), var(seed, 1).one_like());
  EXPECT_THROW(kronecker_basis(lat, 2, 7), BudgetExceeded);
}

TEST(Kronecker, Triangularity) {
  const auto lat = fixtures::kronecker();
  for (fp_t p : {2u, 3u}) {
    const auto basis = kronecker_basis(lat, p, 2);
    const auto r = triangularity_check(basis, lat, *find_grading(lat));
    EXPECT_TRUE(r.ok) << (r.problems.empty() ? "" : r.problems.front());
    for (const auto& l : r.leading)
      if (l.label == "d (1,1)") EXPECT_EQ(l.exponent, (IntVec{-1, 1, 1, 1}));
  }
}

TEST(Kronecker, DuplicateIsCaught) {
  const auto lat = fixtures::kronecker();
  auto basis = kronecker_basis(lat, 2, 1);
  basis.push_back({"copy", std::nullopt, std::nullopt, basis.front().value});
  const auto r = triangularity_check(basis, lat, *find_grading(lat));
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.problems.empty());
  EXPECT_NE(r.problems.back().find("copy"), std::string::npos);
  EXPECT_NE(r.problems.back().find(basis.front().label), std::string::npos);
}

TEST(Kronecker, NonUnitLeadingCoefficientIsCaught) {
  const auto lat = fixtures::kronecker();
  auto basis = kronecker_basis(lat, 2, 1);
  basis[0].value = basis[0].value.scaled(SqrtElement(2, 3));
  EXPECT_FALSE(triangularity_check(basis, lat, *find_grading(lat)).ok);
}

TEST(Kronecker, ClusterVariablesAreMembers) {
  const auto lat = fixtures::kronecker();
  const auto basis = kronecker_basis(lat, 2, 4);
  const auto vars = cluster_variables(lat, 2, 4);
  EXPECT_EQ(vars.size(), 2u + 8u);
  for (const auto& x : vars) EXPECT_TRUE(member(basis, x)) << x;
}

TEST(Kronecker, RigidModules) {
  const auto lat = fixtures::kronecker();
  for (const IntVec& d : {IntVec{1, 0}, IntVec{0, 1}, IntVec{2, 1}, IntVec{1, 2}, IntVec{3, 2}, IntVec{4, 3}}) {
    const auto m = rigid_module_with_dims(lat, 2, d);
    ASSERT_TRUE(m) << vec_to_string(d);
    EXPECT_TRUE(is_rigid(*m));
  }
  EXPECT_FALSE(rigid_module_with_dims(lat, 2, {1, 1}));
}

TEST(FiniteType, A2Count) {
  const auto lat = fixtures::a2();
  // By hand: 6 rigid modules of size <= 2, shifts with Hom(P, M0) = 0.
  const auto basis = finite_type_basis(lat, 2, 2);
  EXPECT_EQ(basis.size(), 13u);
  EXPECT_EQ(basis.front().value, SpecElement::monomial(SqrtField(2), lat.lambda, {0, 0, 0, 0}));
  for (const auto& b : basis) {
    ASSERT_TRUE(b.object);
    EXPECT_TRUE(is_rigid_object(*b.object));
    EXPECT_TRUE(support_cone_check(*b.object, b.value, lat).ok) << b.label;
  }
}

TEST(FiniteType, A2Triangular) {
  const auto lat = fixtures::a2();
  for (fp_t p : {2u, 3u}) {
    const auto r = triangularity_check(finite_type_basis(lat, p, 2), lat, *find_grading(lat));
    EXPECT_TRUE(r.ok) << (r.problems.empty() ? "" : r.problems.front());
  }
}

TEST(FiniteType, A2ClusterVariablesAreMembers) {
  const auto lat = fixtures::a2();
  const auto basis = finite_type_basis(lat, 2, 2);
  const auto vars = cluster_variables(lat, 2, 4);
  EXPECT_EQ(vars.size(), 5u);
  for (const auto& x : vars) EXPECT_TRUE(member(basis, x)) << x;
}

TEST(FiniteType, A3GradedTriangular) {
  const auto lat = fixtures::a3_graded();
  const auto basis = finite_type_basis(lat, 2, 2);
  const auto r = triangularity_check(basis, lat, *find_grading(lat));
  EXPECT_TRUE(r.ok) << (r.problems.empty() ? "" : r.problems.front());
}
