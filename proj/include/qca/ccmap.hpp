#pragma once

// The quantum Caldero-Chapoton map
//   X_{M (+) P[1]} = sum_e |Gr_e M| v^{-<e, m-e>} X^{B~e - (I~-R~)m + dim P/rad P}
// and the lambda-vector / support-cone / grading helpers built on it.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/error.hpp"
#include "qca/finrep.hpp"
#include "qca/int_matrix.hpp"
#include "qca/lattice.hpp"
#include "qca/qtorus.hpp"
#include "qca/scalars.hpp"

namespace qca {

// M0 (+) P[1]; shift[i] is the multiplicity of P_i (all m vertices).
struct CCObject {
  FqRep module;
  std::vector<int> shift;
};

inline CCObject module_object(const FqRep& m) {
  return {m, std::vector<int>(static_cast<std::size_t>(m.vertices()), 0)};
}

inline CCObject shift_object(fp_t p, QuiverPtr q, std::vector<int> shift) {
  return {zero_rep(p, q), std::move(shift)};
}

// Ext^1(M0, M0) = 0 and Hom(P, M0) = 0, where Hom(P_i, M0) = (M0)_i.
inline bool is_rigid_object(const CCObject& o) {
  for (std::size_t i = 0; i < o.shift.size(); ++i)
    if (o.shift[i] > 0 && o.module.dim(static_cast<int>(i)) > 0) return false;
  return is_rigid(o.module);
}

inline std::vector<int> principal_dims(const LatticeData& lat, const FqRep& m) {
  return std::vector<int>(m.dims.begin(), m.dims.begin() + lat.n());
}

inline void check_object(const LatticeData& lat, const CCObject& obj) {
  obj.module.validate();
  if (obj.module.vertices() != lat.m()) throw ContextMismatch("module and lattice have different vertex counts");
  if (!(*obj.module.quiver == *rep_quiver(lat.quiver))) throw ContextMismatch("module is over a different quiver");
  for (int v = lat.n(); v < lat.m(); ++v)
    if (obj.module.dim(v) != 0) throw InvalidInput("CC objects need modules supported on the principal part");
  if (static_cast<int>(obj.shift.size()) != lat.m()) throw InvalidInput("shift vector must have one entry per vertex");
  for (int s : obj.shift)
    if (s < 0) throw InvalidInput("negative shift multiplicity");
}

// Grassmannian data of one CC expansion, term by term.
struct CCTerm {
  std::vector<int> e;  // principal submodule dimension vector
  std::uint64_t count = 0;
  IntVec exponent;
  int v_power = 0;  // coefficient is count * v^{v_power}
};

inline std::vector<CCTerm> cc_terms(const CCObject& obj, const LatticeData& lat) {
  check_object(lat, obj);
  if (!lat.unit_d()) throw InvalidInput("the CC map needs Lambda(-B~) = I~ (D = I)");
  const auto m = principal_dims(lat, obj.module);
  const IntVec base = vec_add(vec_scale(-1, i_minus_r(lat, m)), obj.shift);
  std::vector<CCTerm> out;
  std::vector<int> e(static_cast<std::size_t>(lat.n()), 0);
  while (true) {
    std::vector<int> full(static_cast<std::size_t>(lat.m()), 0);
    std::copy(e.begin(), e.end(), full.begin());
    const auto count = grassmannian_count(obj.module, full);
    if (count) {
      const IntVec rest = vec_sub(m, e);
      out.push_back({e, count, vec_add(base, btilde_times(lat, e)), -static_cast<int>(euler_form(lat, e, rest))});
    }
    int i = 0;
    while (i < lat.n() && ++e[static_cast<std::size_t>(i)] > m[static_cast<std::size_t>(i)]) e[static_cast<std::size_t>(i++)] = 0;
    if (i == lat.n()) break;
  }
  return out;
}

// Specialized at q0 = |k|, the size of the module's field.
inline SpecElement cc(const CCObject& obj, const LatticeData& lat) {
  const SqrtField field(static_cast<std::int64_t>(obj.module.p));
  SpecElement out(field, lat.lambda);
  for (const auto& t : cc_terms(obj, lat)) out.add_term(t.exponent, field.from_integer(mpz_class(static_cast<unsigned long>(t.count))) * field.v_power(t.v_power));
  return out;
}

inline SpecElement cc(const FqRep& m, const LatticeData& lat) { return cc(module_object(m), lat); }

// The same expansion with the point counts kept as plain integers in
// Z[v^{+-1}]. Display only: counts are field-specific.
inline FormalElement cc_formal(const CCObject& obj, const LatticeData& lat) {
  FormalElement out(LaurentRing{}, lat.lambda);
  for (const auto& t : cc_terms(obj, lat))
    out.add_term(t.exponent, LaurentPoly::monomial(t.v_power, mpz_class(static_cast<unsigned long>(t.count))));
  return out;
}

// X_{P[1]} = X^{dim P/rad P}.
inline SpecElement cc_shifted(const std::vector<int>& shift, const LatticeData& lat, std::int64_t q0) {
  if (static_cast<int>(shift.size()) != lat.m()) throw InvalidInput("shift vector must have one entry per vertex");
  return SpecElement::monomial(SqrtField(q0), lat.lambda, shift);
}

// lambda_M = -(I - R) dim M0 + (principal shift multiplicities).
inline IntVec lambda_vector(const CCObject& obj, const LatticeData& lat) {
  const auto m = principal_dims(lat, obj.module);
  IntVec out = vec_scale(-1, lat.euler * m);
  for (int i = 0; i < lat.n(); ++i) out[static_cast<std::size_t>(i)] += obj.shift[static_cast<std::size_t>(i)];
  return out;
}

// Exact cone membership -------------------------------------------------------

// Whether x is a nonnegative rational combination of the given generators.
// By Caratheodory it suffices to try linearly independent subsets.
inline bool in_cone(const std::vector<IntVec>& gens, const IntVec& x) {
  const std::size_t k = gens.size();
  const std::size_t dim = x.size();
  if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; })) return true;
  for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) cols.push_back(j);
    if (cols.size() > dim) continue;
    // Augmented system [G_S | x] over Q.
    std::vector<std::vector<mpq_class>> a(dim, std::vector<mpq_class>(cols.size() + 1));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = gens[cols[c]][r];
      a[r][cols.size()] = x[r];
    }
    std::vector<int> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols.size() && row < dim; ++c) {
      std::size_t sel = dim;
      for (std::size_t r = row; r < dim; ++r)
        if (a[r][c] != 0) {
          sel = r;
          break;
        }
      if (sel == dim) continue;
      std::swap(a[sel], a[row]);
      const mpq_class inv = 1 / a[row][c];
      for (auto& v : a[row]) v *= inv;
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == row || a[r][c] == 0) continue;
        const mpq_class f = a[r][c];
        for (std::size_t c2 = 0; c2 <= cols.size(); ++c2) a[r][c2] -= f * a[row][c2];
      }
      piv.push_back(static_cast<int>(c));
      ++row;
    }
    if (piv.size() != cols.size()) continue;  // dependent subset
    bool consistent = true;
    for (std::size_t r = row; r < dim; ++r)
      if (a[r][cols.size()] != 0) consistent = false;
    if (!consistent) continue;
    bool nonneg = true;
    for (std::size_t r = 0; r < row; ++r)
      if (a[r][cols.size()] < 0) nonneg = false;
    if (nonneg) return true;
  }
  return false;
}

// Whether s = +-(sqrt q0)^k for some integer k.
inline bool is_unit_monomial(const SqrtElement& s) {
  const bool rational = s.sqrt_part() == 0;
  if (!rational && s.rational_part() != 0) return false;
  mpq_class x = abs(rational ? s.rational_part() : s.sqrt_part());
  if (x == 0) return false;
  const mpz_class q0(static_cast<long>(s.q0()));
  mpz_class num = x.get_num(), den = x.get_den();
  if (num != 1 && den != 1) return false;
  mpz_class y = num == 1 ? den : num;
  while (y > 1) {
    if (!mpz_divisible_p(y.get_mpz_t(), q0.get_mpz_t())) return false;
    y /= q0;
  }
  return true;
}

struct ConeReport {
  bool ok = true;
  IntVec lambda;
  std::vector<std::string> problems;
};

// Every principal exponent of x lies in lambda + cone(B alpha_i), and the
// lambda-component of x is a single term with unit coefficient.
inline ConeReport support_cone_check(const CCObject& obj, const SpecElement& x, const LatticeData& lat) {
  ConeReport out;
  out.lambda = lambda_vector(obj, lat);
  std::vector<IntVec> gens;
  for (int i = 0; i < lat.n(); ++i) {
    IntVec col(static_cast<std::size_t>(lat.n()));
    for (int r = 0; r < lat.n(); ++r) col[static_cast<std::size_t>(r)] = lat.btilde(r, i);
    gens.push_back(col);
  }
  int lambda_terms = 0;
  for (const auto& [e, c] : x.terms()) {
    IntVec principal(e.begin(), e.begin() + lat.n());
    const IntVec diff = vec_sub(principal, out.lambda);
    if (!in_cone(gens, diff)) {
      out.ok = false;
      out.problems.push_back("exponent " + vec_to_string(e) + " is outside lambda + cone");
    }
    if (principal == out.lambda) {
      ++lambda_terms;
      if (!is_unit_monomial(c)) {
        out.ok = false;
        out.problems.push_back("lambda-component coefficient " + c.to_string() + " is not a unit monomial");
      }
    }
  }
  if (lambda_terms != 1) {
    out.ok = false;
    out.problems.push_back("lambda-component has " + std::to_string(lambda_terms) + " terms");
  }
  return out;
}

// Integer epsilon with epsilon . (B alpha_i) < 0 for every i, searched in
// the box |epsilon_j| <= bound by increasing max-norm, then lexicographically.
inline std::optional<IntVec> find_grading(const IntMatrix& b, int bound = 3) {
  const int n = b.cols();
  if (b.rows() < n) throw InvalidInput("find_grading needs the principal part of B");
  for (int norm = 1; norm <= bound; ++norm) {
    IntVec eps(static_cast<std::size_t>(n), -norm);
    while (true) {
      const bool on_shell = std::any_of(eps.begin(), eps.end(), [&](int v) { return std::abs(v) == norm; });
      if (on_shell) {
        bool good = true;
        for (int i = 0; i < n && good; ++i) {
          long long s = 0;
          for (int r = 0; r < n; ++r) s += static_cast<long long>(eps[static_cast<std::size_t>(r)]) * b(r, i);
          good = s < 0;
        }
        if (good) return eps;
      }
      int j = n - 1;
      while (j >= 0 && ++eps[static_cast<std::size_t>(j)] > norm) eps[static_cast<std::size_t>(j--)] = -norm;
      if (j < 0) break;
    }
  }
  return std::nullopt;
}

inline std::optional<IntVec> find_grading(const LatticeData& lat, int bound = 3) {
  IntMatrix b(lat.n(), lat.n());
  for (int i = 0; i < lat.n(); ++i)
    for (int j = 0; j < lat.n(); ++j) b(i, j) = lat.btilde(i, j);
  return find_grading(b, bound);
}

}  // namespace qca
