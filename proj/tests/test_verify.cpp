#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace qca;

namespace {

std::vector<LatticeData> small_quivers() { return {fixtures::kronecker(), fixtures::a2(), fixtures::a3()}; }

template <class F>
void for_pairs(const LatticeData& lat, fp_t p, int bound, F visit) {
  const auto mods = fixtures::modules(lat, p, bound);
  for (const auto& m : mods)
    for (const auto& n : mods)
      if (m.total_dim() + n.total_dim() <= bound) visit(m, n);
}

IntVec random_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntVec v(static_cast<std::size_t>(n));
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(Lattice, Lemma31AndCor32Random) {
  std::mt19937 rng(31);
  for (const auto& lat : small_quivers()) {
    for (int s = 0; s < 1000; ++s) {
      const IntVec e = random_vec(rng, lat.n()), f = random_vec(rng, lat.n()), m = random_vec(rng, lat.n()),
                   l = random_vec(rng, lat.n());
      const auto r1 = verify_lemma31(lat, e, f, m);
      const auto r2 = verify_cor32(lat, e, f, m, l);
      ASSERT_TRUE(r1.passed()) << r1.lhs << " vs " << r1.rhs;
      ASSERT_TRUE(r2.passed()) << r2.lhs << " vs " << r2.rhs;
    }
  }
}

TEST(Hall, ExhaustiveF2) {
  const std::vector<std::size_t> expected_pairs{28, 20, 57};
  const auto lats = small_quivers();
  for (std::size_t i = 0; i < lats.size(); ++i) {
    std::size_t pairs = 0;
    for_pairs(lats[i], 2, 3, [&](const FqRep& m, const FqRep& n) {
      ++pairs;
      const auto r = verify_hall_multi(m, n, lats[i]);
      EXPECT_TRUE(r.passed()) << r.inputs[0] << " " << r.inputs[1] << (r.diff.empty() ? "" : " " + r.diff.front());
    });
    EXPECT_EQ(pairs, expected_pairs[i]);
  }
}

TEST(Hall, A2OverF3AndF5) {
  for (fp_t p : {3u, 5u})
    for_pairs(fixtures::a2(), p, 3, [&](const FqRep& m, const FqRep& n) { EXPECT_TRUE(verify_hall_multi(m, n, fixtures::a2()).passed()); });
}

TEST(Hall, KroneckerSimplesByHand) {
  // X_{S1} X_{S2} = v^{-Lambda} (X_{S1 + S2} + sum over regular E) after the v^{2 ext} twist.
  const auto lat = fixtures::kronecker();
  const auto q = rep_quiver(lat.quiver);
  const auto r = verify_hall_multi(simple(2, q, 1), simple(2, q, 0), lat);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.identity, "hall");
}

TEST(Green, SampledQuadruples) {
  int checked = 0;
  for (const auto& lat : {fixtures::kronecker(), fixtures::a2()}) {
    for_pairs(lat, 2, 3, [&](const FqRep& m, const FqRep& n) {
      for (const auto& cls : ext_middles(m, n)) {
        const auto& e = cls.representative;
        std::vector<int> dims(e.dims.size(), 0);
        while (true) {
          for (const auto& sq : submodules_with_dim(e, dims)) {
            const auto r = verify_green(m, n, sq.quotient, sq.sub);
            EXPECT_TRUE(r.passed()) << r.inputs[0] << " " << r.inputs[1] << " " << r.inputs[2] << " " << r.inputs[3];
            ++checked;
          }
          std::size_t v = 0;
          while (v < dims.size() && ++dims[v] > e.dims[v]) dims[v++] = 0;
          if (v == dims.size()) break;
        }
      }
    });
  }
  EXPECT_GE(checked, 100);
}

TEST(Green, MismatchedShapesGiveZero) {
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  const auto s1 = simple(2, q, 0), s2 = simple(2, q, 1);
  const auto r = verify_green(s1, s2, s1, s1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.lhs, "0");
}

TEST(OneDim, A2SimplesApplicable) {
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  for (fp_t p : {2u, 3u, 5u}) {
    const auto m = simple(p, q, 1), n = simple(p, q, 0);
    const auto d = derive_onedim(m, n, lat);
    ASSERT_TRUE(d.applicable) << d.reason;
    EXPECT_TRUE(d.case_two);
    EXPECT_TRUE(d.case_three);
    EXPECT_EQ(d.e.dims, (std::vector<int>{1, 1, 0, 0}));
    EXPECT_EQ(d.euler_a0d0 - d.euler_mn, 1);
    EXPECT_TRUE(verify_onedim(m, n, lat).passed());
    EXPECT_TRUE(verify_qin(m, n, lat).passed());
    EXPECT_TRUE(verify_lemma_special(m, n, d).passed());
  }
}

TEST(OneDim, ExhaustiveScan) {
  int onedim = 0, qin = 0, lemma = 0;
  for (const auto& lat : small_quivers()) {
    for_pairs(lat, 2, 3, [&](const FqRep& m, const FqRep& n) {
      const auto r = verify_onedim(m, n, lat);
      EXPECT_FALSE(r.failed()) << r.inputs[0] << " " << r.inputs[1] << " " << r.note;
      onedim += r.passed();
      const auto rq = verify_qin(m, n, lat);
      EXPECT_FALSE(rq.failed()) << rq.inputs[0] << " " << rq.inputs[1];
      qin += rq.passed();
      const auto d = derive_onedim(m, n, lat);
      const auto rl = verify_lemma_special(m, n, d);
      EXPECT_FALSE(rl.failed());
      lemma += rl.passed();
    });
  }
  EXPECT_EQ(onedim, 6 + 3 + 12);
  EXPECT_EQ(qin, 5);
  EXPECT_EQ(lemma, 5);
}

TEST(OneDim, EveryScalarMultipleOfF) {
  // The data of the formula does not depend on which nonzero f : N -> tau M
  // or which nonsplit class is chosen.
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  const fp_t p = 3;
  const auto m = simple(p, q, 1), n = simple(p, q, 0);
  const auto tm = tau(m);
  const auto fs = hom_basis(n, tm);
  ASSERT_EQ(fs.size(), 1u);
  const auto d = derive_onedim(m, n, lat);
  for (fp_t c = 1; c < p; ++c) {
    const auto f = linear_combination(fs, {c}, n, tm);
    EXPECT_TRUE(is_iso(kernel(n, tm, f).module, d.d0));
    EXPECT_TRUE(is_iso(cokernel(n, tm, f).module, direct_sum(tau(d.a), d.i)));
  }
  const auto classes = ext_transversal(m, n);
  ASSERT_EQ(classes.size(), static_cast<std::size_t>(p));
  for (std::size_t i = 1; i < classes.size(); ++i) EXPECT_TRUE(is_iso(extension(m, n, classes[i]), d.e));
}

TEST(OneDim, InapplicableReasons) {
  const auto lat = fixtures::kronecker();
  const auto q = rep_quiver(lat.quiver);
  const auto r = verify_onedim(simple(2, q, 1), simple(2, q, 0), lat);
  EXPECT_EQ(r.status, Status::Inapplicable);
  EXPECT_NE(r.note.find("not 1"), std::string::npos);
  EXPECT_EQ(verify_qin(simple(2, q, 0), simple(2, q, 0), lat).status, Status::Inapplicable);
}

TEST(Exchange, ApplicableInstances) {
  int applicable = 0;
  for (const auto& lat : small_quivers()) {
    const auto q = rep_quiver(lat.quiver);
    for (const auto& m : fixtures::modules(lat, 2, 3))
      for (int v = 0; v < lat.m(); ++v) {
        const auto r = verify_exchange(m, projective(2, q, v), lat);
        EXPECT_FALSE(r.failed()) << r.inputs[0] << " " << r.inputs[1] << " " << r.note;
        applicable += r.passed();
      }
  }
  EXPECT_GE(applicable, 3);
}

TEST(Exchange, KroneckerSimple) {
  // P_2[1] against S_2: [P_2, S_2] = 1 and S_2 maps onto soc of nu P_2.
  const auto lat = fixtures::kronecker();
  const auto q = rep_quiver(lat.quiver);
  const auto r = verify_exchange(simple(3, q, 1), projective(3, q, 1), lat);
  EXPECT_TRUE(r.passed()) << r.note;
  EXPECT_EQ(verify_exchange(simple(3, q, 1), simple(3, q, 1), lat).status, Status::Inapplicable);
}

TEST(Reflection, RigidObjectsAllQuivers) {
  for (const auto& lat : {fixtures::kronecker(), fixtures::a2(), fixtures::a3(), fixtures::a3_graded()}) {
    const auto q = rep_quiver(lat.quiver);
    int checked = 0;
    for (int k = 1; k <= lat.n(); ++k) {
      if (!lat.quiver.is_source(k)) continue;
      auto mods = fixtures::modules(lat, 2, 3);
      mods.insert(mods.begin(), zero_rep(2, q));
      for (const auto& m : mods)
        for (int v = -1; v < lat.n(); ++v) {
          CCObject obj = module_object(m);
          if (v >= 0) obj.shift[static_cast<std::size_t>(v)] = 1;
          if (!is_rigid_object(obj)) continue;
          const auto r = verify_reflection(k, obj, lat);
          EXPECT_TRUE(r.passed()) << "k=" << k << " " << r.inputs[1] << " " << r.note;
          ++checked;
        }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(Reflection, ObjectTransport) {
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  // S_1 <-> P_1[1].
  const auto a = reflect_object(module_object(simple(2, q, 0)), lat, 1);
  EXPECT_TRUE(a.module.is_zero());
  EXPECT_EQ(a.shift, (std::vector<int>{1, 0, 0, 0}));
  const auto b = reflect_object(shift_object(2, q, {1, 0, 0, 0}), lat, 1);
  EXPECT_EQ(b.module.dims, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(b.shift, (std::vector<int>{0, 0, 0, 0}));
  const auto lat2 = reflected_lattice(lat, 1);
  EXPECT_EQ(lat2.btilde, mutate_btilde(lat.btilde, 1));
  EXPECT_TRUE(lat2.unit_d());
}

TEST(Reflection, NonRigidObjectFails) {
  // S_1 + S_2 on A2 has a self-extension; the transported expansion is off
  // by a v-twist, so the identity is not expected to hold.
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  const auto obj = module_object(direct_sum(simple(2, q, 0), simple(2, q, 1)));
  ASSERT_FALSE(is_rigid_object(obj));
  const auto r = verify_reflection(1, obj, lat);
  EXPECT_TRUE(r.failed());
  EXPECT_NE(r.note.find("not rigid"), std::string::npos);
}

TEST(Reflection, Inapplicable) {
  const auto lat = fixtures::a2();
  const auto q = rep_quiver(lat.quiver);
  EXPECT_EQ(verify_reflection(2, module_object(simple(2, q, 0)), lat).status, Status::Inapplicable);
  EXPECT_EQ(verify_reflection(3, module_object(simple(2, q, 0)), lat).status, Status::Inapplicable);
}
