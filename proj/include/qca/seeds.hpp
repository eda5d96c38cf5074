#pragma once

// Quantum seeds and mutation. Cluster variables are always stored as
// elements of the initial quantum torus.

#include <string>
#include <utility>
#include <vector>

#include "qca/error.hpp"
#include "qca/int_matrix.hpp"
#include "qca/lattice.hpp"
#include "qca/qtorus.hpp"
#include "qca/scalars.hpp"

namespace qca {

template <class Ring>
struct QuantumSeed {
  IntMatrix lambda;  // current Lambda_M
  IntMatrix btilde;  // current B~
  std::vector<TorusElement<Ring>> vars;
  std::vector<int> history;

  int m() const { return btilde.rows(); }
  int n() const { return btilde.cols(); }

  // Equal as seeds: same matrices and the same variables (history ignored).
  friend bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
    return a.lambda == b.lambda && a.btilde == b.btilde && a.vars == b.vars;
  }
};

template <class Ring>
QuantumSeed<Ring> initial_seed(const LatticeData& lat, const Ring& ring) {
  QuantumSeed<Ring> seed{*lat.lambda, lat.btilde, {}, {}};
  for (int i = 0; i < lat.m(); ++i)
    seed.vars.push_back(TorusElement<Ring>::monomial(ring, lat.lambda, unit_vector(lat.m(), i)));
  return seed;
}

// k is 1-based.
inline IntMatrix e_matrix(const IntMatrix& btilde, int k) {
  if (k < 1 || k > btilde.cols()) throw InvalidInput("mutation index " + std::to_string(k) + " out of range");
  const int m = btilde.rows();
  IntMatrix e = IntMatrix::identity(m);
  for (int i = 0; i < m; ++i) e(i, k - 1) = (i == k - 1) ? -1 : std::max(0, -btilde(i, k - 1));
  return e;
}

inline IntMatrix mutate_btilde(const IntMatrix& b, int k) {
  if (k < 1 || k > b.cols()) throw InvalidInput("mutation index " + std::to_string(k) + " out of range");
  const int kk = k - 1;
  IntMatrix out = b;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (i == kk || j == kk) {
        out(i, j) = -b(i, j);
      } else {
        const int bik = b(i, kk), bkj = b(kk, j);
        out(i, j) = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return out;
}

// Asserts X_i X_j = v^{2 lambda_ij} X_j X_i for every pair.
template <class Ring>
void check_quasi_commutation(const QuantumSeed<Ring>& seed) {
  const int m = seed.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& xi = seed.vars[static_cast<std::size_t>(i)];
      const auto& xj = seed.vars[static_cast<std::size_t>(j)];
      if (xi * xj != (xj * xi).times_v_power(2 * seed.lambda(i, j)))
        throw InvariantViolation("cluster variables " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " do not quasi-commute per the mutated Lambda");
    }
}

template <class Ring>
QuantumSeed<Ring> mutate(const QuantumSeed<Ring>& seed, int k) {
  const IntMatrix e = e_matrix(seed.btilde, k);
  const int m = seed.m();
  const int kk = k - 1;
  const IntVec ek = unit_vector(m, kk);
  const IntVec c1 = e.column(kk);
  const IntVec c2 = vec_add(c1, seed.btilde.column(kk));
  auto numerator_term = [&](const IntVec& c) {
    // M(c) = v^{Lambda(c, e_k)} M(c + e_k) X_k^{-1}; c + e_k is nonnegative.
    const IntVec shifted = vec_add(c, ek);
    for (int x : shifted)
      if (x < 0) throw InvariantViolation("exchange monomial has a negative exponent");
    return normalized(shifted, seed.vars, seed.lambda).times_v_power(static_cast<int>(bilinear(seed.lambda, c, ek)));
  };
  const auto numerator = numerator_term(c1) + numerator_term(c2);
  QuantumSeed<Ring> out = seed;
  out.vars[static_cast<std::size_t>(kk)] = divide_exact(numerator, seed.vars[static_cast<std::size_t>(kk)], Side::Right);
  out.lambda = e.transpose() * seed.lambda * e;
  out.btilde = mutate_btilde(seed.btilde, k);
  out.history.push_back(k);
  const auto compat = check_compatible(out.lambda, out.btilde);
  if (!compat.ok) throw InvariantViolation("mutated pair is not compatible: " + compat.diagnostic);
  check_quasi_commutation(out);
  return out;
}

template <class Ring>
QuantumSeed<Ring> mutate_sequence(QuantumSeed<Ring> seed, const std::vector<int>& ks) {
  for (int k : ks) seed = mutate(seed, k);
  return seed;
}

// M'(c) = sum_{p=0}^{c_k} [c_k p]_{v^{d_k}} M(E c + p b^k), evaluated in the
// initial torus through the current seed's normalized monomials.
template <class Ring>
TorusElement<Ring> frame_eval(const QuantumSeed<Ring>& seed, const IntVec& c, int k) {
  const IntMatrix e = e_matrix(seed.btilde, k);
  const int kk = k - 1;
  if (static_cast<int>(c.size()) != seed.m()) throw InvalidInput("frame_eval: vector length mismatch");
  const int ck = c[static_cast<std::size_t>(kk)];
  if (ck < 0) throw InvalidInput("frame_eval needs c_k >= 0");
  const auto compat = check_compatible(seed.lambda, seed.btilde);
  if (!compat.ok) throw InvariantViolation("seed is not compatible: " + compat.diagnostic);
  const int dk = compat.d[static_cast<std::size_t>(kk)];
  const Ring& ring = seed.vars[0].ring();
  const auto base = ring.v_power(dk);
  const IntVec ec = e * c;
  const IntVec bk = seed.btilde.column(kk);
  TorusElement<Ring> out = seed.vars[0].zero_like();
  for (int p = 0; p <= ck; ++p) {
    const IntVec arg = vec_add(ec, vec_scale(p, bk));
    out += normalized(arg, seed.vars, seed.lambda).scaled(qbinom(ring, ck, p, base));
  }
  return out;
}

}  // namespace qca
