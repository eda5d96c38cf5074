#pragma once

#include <random>
#include <string>
#include <vector>

#include "qca/qca.hpp"

namespace fixtures {

using namespace qca;

inline std::string data(const std::string& rel) { return std::string(QCA_DATA_DIR) + "/" + rel; }

inline IntMatrix kronecker_lambda() { return IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, -2}, {0, -1, 2, 0}}; }

inline LatticeData kronecker() { return make_lattice(IceQuiver{4, 2, {{1, 2}, {1, 2}, {1, 3}, {2, 4}}}, kronecker_lambda()); }
inline LatticeData a2() { return make_lattice(IceQuiver{4, 2, {{1, 2}, {1, 3}, {2, 4}}}); }
inline LatticeData a3() { return make_lattice(IceQuiver{6, 3, {{1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}}}); }
inline LatticeData a3_graded() { return make_lattice(IceQuiver{6, 3, {{1, 2}, {3, 2}, {1, 4}, {2, 5}, {3, 6}}}); }

// Nonzero principal modules up to iso with total dimension <= bound.
inline std::vector<FqRep> modules(const LatticeData& lat, fp_t p, int bound) {
  std::vector<FqRep> out;
  for (auto& m : enumerate_modules(p, rep_quiver(lat.quiver), principal_vertices(lat.n()), bound))
    if (!m.is_zero()) out.push_back(std::move(m));
  return out;
}

inline FpMat random_matrix(std::mt19937& rng, int rows, int cols, fp_t p) {
  std::uniform_int_distribution<fp_t> coeff(0, p - 1);
  FpMat out(rows, cols, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = coeff(rng);
  return out;
}

inline FpMat random_invertible(std::mt19937& rng, int n, fp_t p) {
  while (true) {
    FpMat g = random_matrix(rng, n, n, p);
    if (is_invertible(g)) return g;
  }
}

// Random representation with dimension at most max_dim at the given vertices.
inline FqRep random_module(std::mt19937& rng, fp_t p, QuiverPtr q, const std::vector<int>& support, int max_dim) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::vector<int> dims(static_cast<std::size_t>(q->vertices), 0);
  for (int v : support) dims[static_cast<std::size_t>(v)] = dim(rng);
  FqRep m = rep_with_dims(p, q, dims);
  for (int a = 0; a < q->arrow_count(); ++a)
    m.maps[static_cast<std::size_t>(a)] = random_matrix(rng, m.dim(q->head(a)), m.dim(q->tail(a)), p);
  return m;
}

// The same module after a random change of basis at every vertex.
inline FqRep random_conjugate(std::mt19937& rng, const FqRep& m) {
  std::vector<FpMat> g;
  for (int v = 0; v < m.vertices(); ++v) g.push_back(random_invertible(rng, m.dim(v), m.p));
  FqRep out = m;
  const auto& q = *m.quiver;
  for (int a = 0; a < q.arrow_count(); ++a)
    out.maps[static_cast<std::size_t>(a)] =
        g[static_cast<std::size_t>(q.head(a))] * m.map(a) * inverse(g[static_cast<std::size_t>(q.tail(a))]);
  return out;
}

template <class Ring>
TorusElement<Ring> var(const QuantumSeed<Ring>& s, int i) {
  return s.vars[static_cast<std::size_t>(i - 1)];
}

}  // namespace fixtures
