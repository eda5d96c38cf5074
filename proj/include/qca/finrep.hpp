#pragma once

// Representations of a finite acyclic quiver over a prime field F_p.
//
// Convention: an ice-quiver arrow i -> j carries a linear map M_j -> M_i.
// Internally we therefore work with the "representation quiver", which has
// the same arrows (same indices) with tail j and head i. Everything in this
// file is phrased in terms of that quiver: a map for arrow a goes from the
// space at tail(a) to the space at head(a), as a dims[head] x dims[tail]
// matrix acting on column vectors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qca/error.hpp"
#include "qca/fp_linalg.hpp"
#include "qca/lattice.hpp"

namespace qca {

struct RepQuiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;  // (tail, head), 0-based

  int tail(int a) const { return arrows[static_cast<std::size_t>(a)].first; }
  int head(int a) const { return arrows[static_cast<std::size_t>(a)].second; }
  int arrow_count() const { return static_cast<int>(arrows.size()); }

  bool is_sink(int v) const {
    return std::none_of(arrows.begin(), arrows.end(), [&](const auto& a) { return a.first == v; });
  }
  bool is_source(int v) const {
    return std::none_of(arrows.begin(), arrows.end(), [&](const auto& a) { return a.second == v; });
  }

  RepQuiver opposite() const {
    RepQuiver out{vertices, {}};
    for (const auto& [t, h] : arrows) out.arrows.emplace_back(h, t);
    return out;
  }

  // Reverse every arrow incident to v.
  RepQuiver reversed_at(int v) const {
    RepQuiver out = *this;
    for (auto& [t, h] : out.arrows)
      if (t == v || h == v) std::swap(t, h);
    return out;
  }

  friend bool operator==(const RepQuiver& a, const RepQuiver& b) {
    return a.vertices == b.vertices && a.arrows == b.arrows;
  }
};

using QuiverPtr = std::shared_ptr<const RepQuiver>;

inline QuiverPtr rep_quiver(const IceQuiver& q) {
  q.validate();
  RepQuiver out{q.m, {}};
  for (const auto& a : q.arrows) out.arrows.emplace_back(a.target - 1, a.source - 1);
  return std::make_shared<const RepQuiver>(std::move(out));
}

struct FqRep {
  fp_t p = 2;
  QuiverPtr quiver;
  std::vector<int> dims;
  std::vector<FpMat> maps;

  int vertices() const { return quiver->vertices; }
  int dim(int v) const { return dims[static_cast<std::size_t>(v)]; }
  const FpMat& map(int a) const { return maps[static_cast<std::size_t>(a)]; }

  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }

  void validate() const {
    if (!quiver) throw InvalidInput("representation without a quiver");
    if (static_cast<int>(dims.size()) != quiver->vertices) throw InvalidInput("dimension vector has wrong length");
    if (static_cast<int>(maps.size()) != quiver->arrow_count()) throw InvalidInput("wrong number of arrow maps");
    for (int d : dims)
      if (d < 0) throw InvalidInput("negative dimension");
    for (int a = 0; a < quiver->arrow_count(); ++a) {
      const auto& mat = map(a);
      if (mat.rows() != dim(quiver->head(a)) || mat.cols() != dim(quiver->tail(a)) || mat.p() != p)
        throw InvalidInput("arrow " + std::to_string(a) + " matrix has the wrong shape");
    }
  }
};

// g[v] : M_v -> N_v as a dims_N[v] x dims_M[v] matrix.
using Morphism = std::vector<FpMat>;

inline void check_same_category(const FqRep& m, const FqRep& n) {
  if (m.p != n.p) throw ContextMismatch("representations over different fields");
  if (!(m.quiver == n.quiver || *m.quiver == *n.quiver)) throw ContextMismatch("representations of different quivers");
}

inline FqRep zero_rep(fp_t p, QuiverPtr q) {
  FqRep out{p, q, std::vector<int>(static_cast<std::size_t>(q->vertices), 0), {}};
  for (int a = 0; a < q->arrow_count(); ++a) out.maps.emplace_back(0, 0, p);
  return out;
}

// Representation with given dims and all maps zero.
inline FqRep rep_with_dims(fp_t p, QuiverPtr q, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != q->vertices) throw InvalidInput("dimension vector has wrong length");
  FqRep out{p, q, dims, {}};
  for (int a = 0; a < q->arrow_count(); ++a) out.maps.emplace_back(dims[static_cast<std::size_t>(q->head(a))], dims[static_cast<std::size_t>(q->tail(a))], p);
  return out;
}

inline FqRep simple(fp_t p, QuiverPtr q, int v) {
  if (v < 0 || v >= q->vertices) throw InvalidInput("vertex out of range");
  std::vector<int> dims(static_cast<std::size_t>(q->vertices), 0);
  dims[static_cast<std::size_t>(v)] = 1;
  return rep_with_dims(p, q, dims);
}

struct QuiverPath {
  int start = 0;
  int end = 0;
  std::vector<int> arrows;  // in order of traversal
};

inline std::vector<QuiverPath> all_paths(const RepQuiver& q) {
  std::vector<QuiverPath> out;
  for (int v = 0; v < q.vertices; ++v) out.push_back({v, v, {}});
  // Acyclic, so extending until nothing changes terminates.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (q.tail(a) != out[i].end) continue;
      QuiverPath next = out[i];
      next.arrows.push_back(a);
      next.end = q.head(a);
      out.push_back(std::move(next));
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<const QuiverPath*>> paths_by_endpoint(const std::vector<QuiverPath>& paths, int vertices,
                                                                     bool by_start, int fixed) {
  std::vector<std::vector<const QuiverPath*>> out(static_cast<std::size_t>(vertices));
  for (const auto& pth : paths) {
    if (by_start && pth.start == fixed) out[static_cast<std::size_t>(pth.end)].push_back(&pth);
    if (!by_start && pth.end == fixed) out[static_cast<std::size_t>(pth.start)].push_back(&pth);
  }
  return out;
}

inline int find_path(const std::vector<const QuiverPath*>& list, const std::vector<int>& arrows) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i]->arrows == arrows) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// (P_i)_j has a basis of paths from i to j.
inline FqRep projective(fp_t p, QuiverPtr q, int i) {
  if (i < 0 || i >= q->vertices) throw InvalidInput("vertex out of range");
  const auto paths = all_paths(*q);
  const auto at = detail::paths_by_endpoint(paths, q->vertices, true, i);
  std::vector<int> dims;
  for (const auto& list : at) dims.push_back(static_cast<int>(list.size()));
  FqRep out = rep_with_dims(p, q, dims);
  for (int a = 0; a < q->arrow_count(); ++a) {
    const auto& from = at[static_cast<std::size_t>(q->tail(a))];
    const auto& to = at[static_cast<std::size_t>(q->head(a))];
    for (std::size_t r = 0; r < from.size(); ++r) {
      auto ext = from[r]->arrows;
      ext.push_back(a);
      out.maps[static_cast<std::size_t>(a)](detail::find_path(to, ext), static_cast<int>(r)) = 1;
    }
  }
  return out;
}

// (I_i)_j is dual to the paths from j to i.
inline FqRep injective(fp_t p, QuiverPtr q, int i) {
  if (i < 0 || i >= q->vertices) throw InvalidInput("vertex out of range");
  const auto paths = all_paths(*q);
  const auto at = detail::paths_by_endpoint(paths, q->vertices, false, i);
  std::vector<int> dims;
  for (const auto& list : at) dims.push_back(static_cast<int>(list.size()));
  FqRep out = rep_with_dims(p, q, dims);
  for (int a = 0; a < q->arrow_count(); ++a) {
    const auto& from = at[static_cast<std::size_t>(q->tail(a))];
    const auto& to = at[static_cast<std::size_t>(q->head(a))];
    for (std::size_t r = 0; r < from.size(); ++r) {
      const auto& arr = from[r]->arrows;
      if (arr.empty() || arr.front() != a) continue;
      std::vector<int> rest(arr.begin() + 1, arr.end());
      out.maps[static_cast<std::size_t>(a)](detail::find_path(to, rest), static_cast<int>(r)) = 1;
    }
  }
  return out;
}

// nu(w) : I_h -> I_t for a path w from t to h.
inline Morphism nakayama_path_map(fp_t p, QuiverPtr q, const std::vector<int>& w, int t, int h) {
  const auto paths = all_paths(*q);
  const auto to_t = detail::paths_by_endpoint(paths, q->vertices, false, t);
  const auto to_h = detail::paths_by_endpoint(paths, q->vertices, false, h);
  Morphism out;
  for (int j = 0; j < q->vertices; ++j) {
    const auto& rows = to_t[static_cast<std::size_t>(j)];
    const auto& cols = to_h[static_cast<std::size_t>(j)];
    FpMat mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()), p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto ext = rows[r]->arrows;
      ext.insert(ext.end(), w.begin(), w.end());
      const int c = detail::find_path(cols, ext);
      if (c >= 0) mat(static_cast<int>(r), c) = 1;
    }
    out.push_back(std::move(mat));
  }
  return out;
}

inline FqRep direct_sum(const FqRep& m, const FqRep& n) {
  check_same_category(m, n);
  std::vector<int> dims(m.dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = m.dims[v] + n.dims[v];
  FqRep out = rep_with_dims(m.p, m.quiver, dims);
  for (int a = 0; a < m.quiver->arrow_count(); ++a) {
    auto& mat = out.maps[static_cast<std::size_t>(a)];
    mat.set_block(0, 0, m.map(a));
    mat.set_block(m.dim(m.quiver->head(a)), m.dim(m.quiver->tail(a)), n.map(a));
  }
  return out;
}

inline FqRep direct_sum(const std::vector<FqRep>& parts, fp_t p, QuiverPtr q) {
  FqRep out = zero_rep(p, q);
  for (const auto& x : parts) out = direct_sum(out, x);
  return out;
}

inline FqRep power(const FqRep& m, int k) {
  FqRep out = zero_rep(m.p, m.quiver);
  for (int i = 0; i < k; ++i) out = direct_sum(out, m);
  return out;
}

// Dual representation D M over the opposite quiver.
inline FqRep dual(const FqRep& m, QuiverPtr opposite = nullptr) {
  if (!opposite) opposite = std::make_shared<const RepQuiver>(m.quiver->opposite());
  FqRep out{m.p, opposite, m.dims, {}};
  for (const auto& mat : m.maps) out.maps.push_back(mat.transpose());
  out.validate();
  return out;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

inline bool is_vertexwise_invertible(const Morphism& f) {
  return std::all_of(f.begin(), f.end(), [](const FpMat& x) { return is_invertible(x); });
}

inline bool is_zero_morphism(const Morphism& f) {
  return std::all_of(f.begin(), f.end(), [](const FpMat& x) { return x.is_zero(); });
}

inline bool is_morphism(const FqRep& m, const FqRep& n, const Morphism& g) {
  for (int a = 0; a < m.quiver->arrow_count(); ++a) {
    const int t = m.quiver->tail(a), h = m.quiver->head(a);
    if (!(n.map(a) * g[static_cast<std::size_t>(t)] == g[static_cast<std::size_t>(h)] * m.map(a))) return false;
  }
  return true;
}

// Hom and Ext ----------------------------------------------------------------

// The map delta : (+)_v Hom(M_v, N_v) -> (+)_a Hom(M_tail, N_head),
// delta(g)_a = g_head M_a - N_a g_tail, as a matrix. Its kernel is Hom(M, N)
// and its cokernel is Ext^1(M, N).
struct HomSystem {
  FpMat delta;
  std::vector<int> domain_offset;    // per vertex, into the g coordinates
  std::vector<int> codomain_offset;  // per arrow, into the f coordinates
};

inline HomSystem hom_system(const FqRep& m, const FqRep& n) {
  check_same_category(m, n);
  const auto& q = *m.quiver;
  HomSystem out;
  int dom = 0;
  for (int v = 0; v < q.vertices; ++v) {
    out.domain_offset.push_back(dom);
    dom += n.dim(v) * m.dim(v);
  }
  int cod = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    out.codomain_offset.push_back(cod);
    cod += n.dim(q.head(a)) * m.dim(q.tail(a));
  }
  out.delta = FpMat(cod, dom, m.p);
  const fp_t p = m.p;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const int t = q.tail(a), h = q.head(a);
    const int mt = m.dim(t), mh = m.dim(h), nt = n.dim(t), nh = n.dim(h);
    const auto& ma = m.map(a);  // mh x mt
    const auto& na = n.map(a);  // nh x nt
    for (int i = 0; i < nh; ++i)
      for (int j = 0; j < mt; ++j) {
        const int row = out.codomain_offset[static_cast<std::size_t>(a)] + i * mt + j;
        // + sum_l g_h[i,l] M_a[l,j]
        for (int l = 0; l < mh; ++l) {
          const int col = out.domain_offset[static_cast<std::size_t>(h)] + i * mh + l;
          out.delta(row, col) = static_cast<fp_t>((out.delta(row, col) + ma(l, j)) % p);
        }
        // - sum_k N_a[i,k] g_t[k,j]
        for (int k = 0; k < nt; ++k) {
          const int col = out.domain_offset[static_cast<std::size_t>(t)] + k * mt + j;
          out.delta(row, col) = static_cast<fp_t>((out.delta(row, col) + p - na(i, k)) % p);
        }
      }
  }
  return out;
}

inline Morphism morphism_from_coords(const FqRep& m, const FqRep& n, const HomSystem& sys, const FpMat& col, int c) {
  Morphism g;
  for (int v = 0; v < m.vertices(); ++v) {
    FpMat gv(n.dim(v), m.dim(v), m.p);
    for (int i = 0; i < n.dim(v); ++i)
      for (int j = 0; j < m.dim(v); ++j) gv(i, j) = col(sys.domain_offset[static_cast<std::size_t>(v)] + i * m.dim(v) + j, c);
    g.push_back(std::move(gv));
  }
  return g;
}

inline std::vector<Morphism> hom_basis(const FqRep& m, const FqRep& n) {
  const auto sys = hom_system(m, n);
  const FpMat ker = nullspace(sys.delta);
  std::vector<Morphism> out;
  for (int c = 0; c < ker.cols(); ++c) out.push_back(morphism_from_coords(m, n, sys, ker, c));
  return out;
}

inline int dim_hom(const FqRep& m, const FqRep& n) {
  const auto sys = hom_system(m, n);
  return sys.delta.cols() - rank(sys.delta);
}

inline int dim_ext(const FqRep& m, const FqRep& n) {
  const auto sys = hom_system(m, n);
  return sys.delta.rows() - rank(sys.delta);
}

inline bool is_rigid(const FqRep& m) { return dim_ext(m, m) == 0; }

inline Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<fp_t>& coeffs, const FqRep& m,
                                   const FqRep& n) {
  Morphism out;
  for (int v = 0; v < m.vertices(); ++v) out.emplace_back(n.dim(v), m.dim(v), m.p);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (!coeffs[b]) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + basis[b][v].scaled(coeffs[b]);
  }
  return out;
}

// Visits every coefficient vector in F_p^k in lexicographic order. Stops
// early when the visitor returns false.
inline void for_each_vector(int k, fp_t p, const std::function<bool(const std::vector<fp_t>&)>& visit) {
  long double total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  if (total > static_cast<long double>(enumeration_budget()))
    throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" + std::to_string(k) + " vectors exceeds the budget");
  std::vector<fp_t> x(static_cast<std::size_t>(k), 0);
  while (true) {
    if (!visit(x)) return;
    int i = k - 1;
    while (i >= 0 && ++x[static_cast<std::size_t>(i)] == p) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

// Extension classes: an element f = (f_a)_a, f_a : M_tail -> N_head.
using ExtCocycle = std::vector<FpMat>;

// One representative per class of Ext^1(M, N) (the split class first): unit
// vectors on coordinates complementary to the row-reduced image of delta.
inline std::vector<ExtCocycle> ext_transversal(const FqRep& m, const FqRep& n) {
  const auto sys = hom_system(m, n);
  const auto r = rref(sys.delta.transpose());
  const int cod = sys.delta.rows();
  std::vector<bool> pivot(static_cast<std::size_t>(cod), false);
  for (int c : r.pivots) pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_coords;
  for (int c = 0; c < cod; ++c)
    if (!pivot[static_cast<std::size_t>(c)]) free_coords.push_back(c);
  std::vector<ExtCocycle> out;
  const auto& q = *m.quiver;
  for_each_vector(static_cast<int>(free_coords.size()), m.p, [&](const std::vector<fp_t>& x) {
    ExtCocycle f;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const int mt = m.dim(q.tail(a));
      FpMat fa(n.dim(q.head(a)), mt, m.p);
      for (std::size_t t = 0; t < free_coords.size(); ++t) {
        const int coord = free_coords[t] - sys.codomain_offset[static_cast<std::size_t>(a)];
        if (coord >= 0 && coord < fa.rows() * mt) fa(coord / mt, coord % mt) = x[t];
      }
      f.push_back(std::move(fa));
    }
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

// Middle term of 0 -> N -> E -> M -> 0 for the class f:
// E_v = N_v (+) M_v, E_a = [[N_a, f_a], [0, M_a]].
inline FqRep extension(const FqRep& m, const FqRep& n, const ExtCocycle& f) {
  check_same_category(m, n);
  std::vector<int> dims(m.dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = n.dims[v] + m.dims[v];
  FqRep out = rep_with_dims(m.p, m.quiver, dims);
  const auto& q = *m.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    auto& mat = out.maps[static_cast<std::size_t>(a)];
    const int nh = n.dim(q.head(a)), nt = n.dim(q.tail(a));
    mat.set_block(0, 0, n.map(a));
    mat.set_block(0, nt, f[static_cast<std::size_t>(a)]);
    mat.set_block(nh, nt, m.map(a));
  }
  return out;
}

// Kernels and cokernels ------------------------------------------------------

// Sub-representation spanned at each vertex by the columns of basis[v]
// (assumed independent and stable under the maps).
inline FqRep subrep_from_columns(const FqRep& m, const std::vector<FpMat>& basis) {
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(b.cols());
  FqRep out = rep_with_dims(m.p, m.quiver, dims);
  const auto& q = *m.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& bt = basis[static_cast<std::size_t>(q.tail(a))];
    const auto& bh = basis[static_cast<std::size_t>(q.head(a))];
    if (bt.cols() == 0 || bh.cols() == 0) {
      if (bt.cols() > 0 && !(m.map(a) * bt).is_zero()) throw InvariantViolation("subspace is not stable under the maps");
      continue;
    }
    // Solve bh * X = M_a * bt.
    const FpMat img = m.map(a) * bt;
    const auto r = rref(hstack(bh, img));
    if (!r.pivots.empty() && r.pivots.back() >= bh.cols()) throw InvariantViolation("subspace is not stable under the maps");
    FpMat x(bh.cols(), bt.cols(), m.p);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      for (int c = 0; c < bt.cols(); ++c) x(r.pivots[i], c) = r.rref(static_cast<int>(i), bh.cols() + c);
    out.maps[static_cast<std::size_t>(a)] = x;
  }
  return out;
}

struct KernelResult {
  FqRep module;
  Morphism inclusion;  // K -> M
};

inline KernelResult kernel(const FqRep& m, const FqRep& n, const Morphism& f) {
  (void)n;
  std::vector<FpMat> basis;
  for (std::size_t v = 0; v < f.size(); ++v) basis.push_back(nullspace(f[v]));
  return {subrep_from_columns(m, basis), basis};
}

struct CokernelResult {
  FqRep module;
  Morphism projection;  // N -> C
};

// Quotient of N by the sub-representation spanned by columns of span[v].
// The quotient uses the coordinates that are not pivots of the row-reduced
// span, so the projection is "reduce, then read off those coordinates".
inline CokernelResult quotient_by_columns(const FqRep& n, const std::vector<FpMat>& span) {
  const auto& q = *n.quiver;
  std::vector<FpMat> proj;
  std::vector<int> dims;
  std::vector<std::vector<int>> keeps;
  for (int v = 0; v < q.vertices; ++v) {
    const int d = n.dim(v);
    const auto r = rref(span[static_cast<std::size_t>(v)].transpose());
    std::vector<bool> pivot(static_cast<std::size_t>(d), false);
    for (int c : r.pivots) pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> keep;
    for (int c = 0; c < d; ++c)
      if (!pivot[static_cast<std::size_t>(c)]) keep.push_back(c);
    // pi(x) = x[keep] - sum_i x[piv_i] * row_i[keep]
    FpMat pi(static_cast<int>(keep.size()), d, n.p);
    for (std::size_t k = 0; k < keep.size(); ++k) pi(static_cast<int>(k), keep[k]) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      for (std::size_t k = 0; k < keep.size(); ++k) {
        const fp_t x = r.rref(static_cast<int>(i), keep[k]);
        if (x) pi(static_cast<int>(k), r.pivots[i]) = static_cast<fp_t>((pi(static_cast<int>(k), r.pivots[i]) + n.p - x) % n.p);
      }
    dims.push_back(static_cast<int>(keep.size()));
    proj.push_back(std::move(pi));
    keeps.push_back(std::move(keep));
  }
  FqRep out = rep_with_dims(n.p, n.quiver, dims);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const int t = q.tail(a), h = q.head(a);
    const auto& kt = keeps[static_cast<std::size_t>(t)];
    FpMat section(n.dim(t), static_cast<int>(kt.size()), n.p);
    for (std::size_t k = 0; k < kt.size(); ++k) section(kt[k], static_cast<int>(k)) = 1;
    out.maps[static_cast<std::size_t>(a)] = proj[static_cast<std::size_t>(h)] * n.map(a) * section;
  }
  return {out, proj};
}

inline CokernelResult cokernel(const FqRep& m, const FqRep& n, const Morphism& f) {
  (void)m;
  std::vector<FpMat> span;
  for (const auto& fv : f) span.push_back(fv);
  return quotient_by_columns(n, span);
}

inline FqRep image(const FqRep& m, const FqRep& n, const Morphism& f) {
  (void)m;
  std::vector<FpMat> basis;
  for (const auto& fv : f) basis.push_back(column_space(fv));
  return subrep_from_columns(n, basis);
}

// Submodules -----------------------------------------------------------------

// A subspace of F_p^d stored as its reduced row echelon basis (k x d).
struct Subspace {
  FpMat rows;
  std::vector<int> pivots;

  int dim() const { return rows.rows(); }

  // Whether the column vector w lies in the subspace.
  bool contains(const std::vector<fp_t>& w, fp_t p) const {
    std::vector<fp_t> r = w;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::uint64_t c = r[static_cast<std::size_t>(pivots[i])];
      if (!c) continue;
      for (int j = 0; j < rows.cols(); ++j)
        r[static_cast<std::size_t>(j)] = static_cast<fp_t>((r[static_cast<std::size_t>(j)] + (p - c) * rows(static_cast<int>(i), j)) % p);
    }
    return std::all_of(r.begin(), r.end(), [](fp_t x) { return x == 0; });
  }

  FpMat basis_columns() const { return rows.transpose(); }
};

inline std::uint64_t gaussian_binomial_count(int d, int k, fp_t p) {
  if (k < 0 || k > d) return 0;
  long double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= std::pow(static_cast<long double>(p), d - i) - 1;
    den *= std::pow(static_cast<long double>(p), i + 1) - 1;
  }
  return static_cast<std::uint64_t>(num / den + 0.5L);
}

// All k-dimensional subspaces of F_p^d, in a fixed order.
inline std::vector<Subspace> subspaces(int d, int k, fp_t p) {
  std::vector<Subspace> out;
  if (k < 0 || k > d) return out;
  if (gaussian_binomial_count(d, k, p) > enumeration_budget())
    throw BudgetExceeded("too many subspaces of F_" + std::to_string(p) + "^" + std::to_string(d));
  std::vector<int> piv(static_cast<std::size_t>(k));
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      // Free entries: row r, columns > piv[r] that are not pivots.
      std::vector<std::pair<int, int>> free_pos;
      for (int r = 0; r < k; ++r)
        for (int c = piv[static_cast<std::size_t>(r)] + 1; c < d; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_pos.emplace_back(r, c);
      for_each_vector(static_cast<int>(free_pos.size()), p, [&](const std::vector<fp_t>& x) {
        Subspace s{FpMat(k, d, p), piv};
        for (int r = 0; r < k; ++r) s.rows(r, piv[static_cast<std::size_t>(r)]) = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) s.rows(free_pos[t].first, free_pos[t].second) = x[t];
        out.push_back(std::move(s));
        return true;
      });
      return;
    }
    for (int c = start; c <= d - (k - idx); ++c) {
      piv[static_cast<std::size_t>(idx)] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

// Visits every sub-representation U of M with dim U = e, as one subspace per
// vertex. Stops when the visitor returns false.
inline void for_each_submodule(const FqRep& m, const std::vector<int>& e,
                               const std::function<bool(const std::vector<Subspace>&)>& visit) {
  const auto& q = *m.quiver;
  if (static_cast<int>(e.size()) != q.vertices) throw InvalidInput("submodule dimension vector has wrong length");
  for (int v = 0; v < q.vertices; ++v)
    if (e[static_cast<std::size_t>(v)] < 0 || e[static_cast<std::size_t>(v)] > m.dim(v))
      throw InvalidInput("submodule dimension vector out of range");
  std::vector<std::vector<Subspace>> options;
  for (int v = 0; v < q.vertices; ++v) options.push_back(subspaces(m.dim(v), e[static_cast<std::size_t>(v)], m.p));
  // Arrows checked once both endpoints are chosen.
  std::vector<std::vector<int>> check_at(static_cast<std::size_t>(q.vertices));
  for (int a = 0; a < q.arrow_count(); ++a) check_at[static_cast<std::size_t>(std::max(q.tail(a), q.head(a)))].push_back(a);
  std::vector<const Subspace*> chosen(static_cast<std::size_t>(q.vertices), nullptr);
  bool stop = false;
  std::uint64_t steps = 0;
  const std::uint64_t budget = enumeration_budget();
  std::function<void(int)> rec = [&](int v) {
    if (stop) return;
    if (v == q.vertices) {
      std::vector<Subspace> pick;
      for (const auto* s : chosen) pick.push_back(*s);
      if (!visit(pick)) stop = true;
      return;
    }
    for (const auto& s : options[static_cast<std::size_t>(v)]) {
      if (++steps > budget) throw BudgetExceeded("submodule enumeration exceeds the budget");
      chosen[static_cast<std::size_t>(v)] = &s;
      bool ok = true;
      for (int a : check_at[static_cast<std::size_t>(v)]) {
        const Subspace& ut = *chosen[static_cast<std::size_t>(q.tail(a))];
        const Subspace& uh = *chosen[static_cast<std::size_t>(q.head(a))];
        const FpMat img = m.map(a) * ut.basis_columns();
        for (int c = 0; c < img.cols() && ok; ++c) {
          std::vector<fp_t> w(static_cast<std::size_t>(img.rows()));
          for (int r = 0; r < img.rows(); ++r) w[static_cast<std::size_t>(r)] = img(r, c);
          ok = uh.contains(w, m.p);
        }
        if (!ok) break;
      }
      if (ok) rec(v + 1);
      if (stop) return;
    }
  };
  rec(0);
}

inline std::uint64_t grassmannian_count(const FqRep& m, const std::vector<int>& e) {
  std::uint64_t count = 0;
  for_each_submodule(m, e, [&](const std::vector<Subspace>&) {
    ++count;
    return true;
  });
  return count;
}

struct SubmoduleEmbedding {
  FqRep sub;
  FqRep quotient;
  std::vector<Subspace> spaces;
};

inline SubmoduleEmbedding sub_quotient(const FqRep& m, const std::vector<Subspace>& spaces) {
  std::vector<FpMat> cols;
  for (const auto& s : spaces) cols.push_back(s.basis_columns());
  return {subrep_from_columns(m, cols), quotient_by_columns(m, cols).module, spaces};
}

inline std::vector<SubmoduleEmbedding> submodules_with_dim(const FqRep& m, const std::vector<int>& e) {
  std::vector<SubmoduleEmbedding> out;
  for_each_submodule(m, e, [&](const std::vector<Subspace>& s) {
    out.push_back(sub_quotient(m, s));
    return true;
  });
  return out;
}

// Iso classes ----------------------------------------------------------------

inline bool is_iso(const FqRep& m, const FqRep& n) {
  check_same_category(m, n);
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const auto basis = hom_basis(m, n);
  const int h = static_cast<int>(basis.size());
  if (h != dim_hom(m, m) || h != dim_hom(n, n) || h != dim_hom(n, m)) return false;
  // Random sampling finds an isomorphism quickly when one exists.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(h));
  std::uniform_int_distribution<fp_t> coeff(0, m.p - 1);
  for (int trial = 0; trial < 32; ++trial) {
    std::vector<fp_t> x(static_cast<std::size_t>(h));
    for (auto& c : x) c = coeff(rng);
    if (is_vertexwise_invertible(linear_combination(basis, x, m, n))) return true;
  }
  bool found = false;
  for_each_vector(h, m.p, [&](const std::vector<fp_t>& x) {
    if (is_vertexwise_invertible(linear_combination(basis, x, m, n))) found = true;
    return !found;
  });
  return found;
}

// F^M_{AB}: submodules U of M with U ~ B and M/U ~ A.
inline std::uint64_t hall_number(const FqRep& m, const FqRep& a, const FqRep& b) {
  check_same_category(m, a);
  check_same_category(m, b);
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    if (a.dims[v] + b.dims[v] != m.dims[v]) return 0;
  std::uint64_t count = 0;
  for_each_submodule(m, b.dims, [&](const std::vector<Subspace>& s) {
    const auto sq = sub_quotient(m, s);
    if (is_iso(sq.sub, b) && is_iso(sq.quotient, a)) ++count;
    return true;
  });
  return count;
}

// Groups a list of representations into iso classes, preserving first-seen
// order.
struct IsoClass {
  FqRep representative;
  std::uint64_t count = 0;
};

inline void add_to_classes(std::vector<IsoClass>& classes, const FqRep& x, std::uint64_t weight = 1) {
  for (auto& c : classes)
    if (is_iso(c.representative, x)) {
      c.count += weight;
      return;
    }
  classes.push_back({x, weight});
}

// (E up to iso, eps^E_{MN}) over all classes of Ext^1(M, N).
inline std::vector<IsoClass> ext_middles(const FqRep& m, const FqRep& n) {
  std::vector<IsoClass> classes;
  for (const auto& f : ext_transversal(m, n)) add_to_classes(classes, extension(m, n, f));
  return classes;
}

inline std::uint64_t epsilon(const FqRep& e, const FqRep& m, const FqRep& n) {
  for (std::size_t v = 0; v < e.dims.size(); ++v)
    if (e.dims[v] != m.dims[v] + n.dims[v]) return 0;
  std::uint64_t count = 0;
  for (const auto& f : ext_transversal(m, n))
    if (is_iso(extension(m, n, f), e)) ++count;
  return count;
}

// Top, socle, summands ---------------------------------------------------------

inline std::vector<int> top_vector(const FqRep& m) {
  const auto& q = *m.quiver;
  std::vector<int> out;
  for (int v = 0; v < q.vertices; ++v) {
    FpMat incoming(m.dim(v), 0, m.p);
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.head(a) == v) incoming = hstack(incoming, m.map(a));
    out.push_back(m.dim(v) - rank(incoming));
  }
  return out;
}

inline std::vector<int> socle_vector(const FqRep& m) {
  const auto& q = *m.quiver;
  std::vector<int> out;
  for (int v = 0; v < q.vertices; ++v) {
    FpMat outgoing(0, m.dim(v), m.p);
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.tail(a) == v) outgoing = vstack(outgoing, m.map(a));
    out.push_back(m.dim(v) - rank(outgoing));
  }
  return out;
}

inline bool is_projective(const FqRep& m) {
  const auto top = top_vector(m);
  std::vector<int> total(m.dims.size(), 0);
  for (int v = 0; v < m.vertices(); ++v) {
    if (!top[static_cast<std::size_t>(v)]) continue;
    const auto pv = projective(m.p, m.quiver, v);
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += top[static_cast<std::size_t>(v)] * pv.dims[j];
  }
  return total == m.dims;
}

inline bool is_injective(const FqRep& m) {
  const auto soc = socle_vector(m);
  std::vector<int> total(m.dims.size(), 0);
  for (int v = 0; v < m.vertices(); ++v) {
    if (!soc[static_cast<std::size_t>(v)]) continue;
    const auto iv = injective(m.p, m.quiver, v);
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += soc[static_cast<std::size_t>(v)] * iv.dims[j];
  }
  return total == m.dims;
}

struct SplitResult {
  int multiplicity = 0;
  FqRep complement;
};

// Splits C = Y^r (+) C' for a brick Y (End Y = k), with r maximal.
inline SplitResult split_off(const FqRep& c, const FqRep& y) {
  check_same_category(c, y);
  if (y.is_zero()) throw InvalidInput("cannot split off the zero module");
  if (dim_hom(y, y) != 1) throw InvalidInput("split_off needs a summand candidate with End = k");
  const auto hs = hom_basis(y, c);
  const auto gs = hom_basis(c, y);
  int vy = 0;
  while (y.dim(vy) == 0) ++vy;
  FpMat pairing(static_cast<int>(gs.size()), static_cast<int>(hs.size()), c.p);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j)
      pairing(static_cast<int>(i), static_cast<int>(j)) = (gs[i][static_cast<std::size_t>(vy)] * hs[j][static_cast<std::size_t>(vy)])(0, 0);
  // Rows of the pairing with independent images pick the g's to use.
  const auto rr = rref(pairing.transpose());
  const int r = static_cast<int>(rr.pivots.size());
  SplitResult out{r, c};
  if (r == 0) return out;
  std::vector<FpMat> kernel_basis;
  for (int v = 0; v < c.vertices(); ++v) {
    FpMat stacked(0, c.dim(v), c.p);
    for (int idx : rr.pivots) stacked = vstack(stacked, gs[static_cast<std::size_t>(idx)][static_cast<std::size_t>(v)]);
    kernel_basis.push_back(nullspace(stacked));
  }
  out.complement = subrep_from_columns(c, kernel_basis);
  return out;
}

struct SummandSplit {
  std::vector<int> multiplicities;  // per vertex
  FqRep rest;
};

// C = (+) I_v^{mult_v} (+) rest with rest having no injective summand.
inline SummandSplit split_injective_part(const FqRep& c) {
  SummandSplit out{std::vector<int>(static_cast<std::size_t>(c.vertices()), 0), c};
  for (int v = 0; v < c.vertices(); ++v) {
    const auto sr = split_off(out.rest, injective(c.p, c.quiver, v));
    out.multiplicities[static_cast<std::size_t>(v)] = sr.multiplicity;
    out.rest = sr.complement;
  }
  return out;
}

inline SummandSplit split_projective_part(const FqRep& c) {
  SummandSplit out{std::vector<int>(static_cast<std::size_t>(c.vertices()), 0), c};
  for (int v = 0; v < c.vertices(); ++v) {
    const auto sr = split_off(out.rest, projective(c.p, c.quiver, v));
    out.multiplicities[static_cast<std::size_t>(v)] = sr.multiplicity;
    out.rest = sr.complement;
  }
  return out;
}

inline FqRep injective_sum(fp_t p, QuiverPtr q, const std::vector<int>& mult) {
  FqRep out = zero_rep(p, q);
  for (int v = 0; v < q->vertices; ++v) out = direct_sum(out, power(injective(p, q, v), mult[static_cast<std::size_t>(v)]));
  return out;
}

inline FqRep projective_sum(fp_t p, QuiverPtr q, const std::vector<int>& mult) {
  FqRep out = zero_rep(p, q);
  for (int v = 0; v < q->vertices; ++v) out = direct_sum(out, power(projective(p, q, v), mult[static_cast<std::size_t>(v)]));
  return out;
}

// Indecomposable iff End(M) has no idempotent other than 0 and 1.
inline bool is_indecomposable(const FqRep& m) {
  if (m.is_zero()) return false;
  const auto basis = hom_basis(m, m);
  if (basis.size() == 1) return true;
  bool split = false;
  for_each_vector(static_cast<int>(basis.size()), m.p, [&](const std::vector<fp_t>& x) {
    const auto e = linear_combination(basis, x, m, m);
    if (is_zero_morphism(e) || is_vertexwise_invertible(e)) return true;
    if (compose(e, e) == e) split = true;
    return !split;
  });
  return !split;
}

// AR translate -------------------------------------------------------------------

// tau M as the kernel of nu(d), where
//   d : (+)_a P_head(a) (x) M_tail(a) -> (+)_v P_v (x) M_v
// is the standard projective resolution of M. Projective summands of M
// contribute nothing, so tau(P) = 0.
inline FqRep tau(const FqRep& m) {
  const auto& q = *m.quiver;
  const fp_t p = m.p;
  std::vector<FqRep> inj;
  for (int v = 0; v < q.vertices; ++v) inj.push_back(injective(p, m.quiver, v));
  // Domain: (+)_a I_head(a) (x) M_tail(a); codomain: (+)_v I_v (x) M_v.
  auto tensor = [&](const FqRep& i, int copies) {
    std::vector<int> dims;
    for (int v = 0; v < q.vertices; ++v) dims.push_back(i.dim(v) * copies);
    FqRep out = rep_with_dims(p, m.quiver, dims);
    for (int a = 0; a < q.arrow_count(); ++a) out.maps[static_cast<std::size_t>(a)] = kron(i.map(a), FpMat::identity(copies, p));
    return out;
  };
  FqRep dom = zero_rep(p, m.quiver);
  FqRep cod = zero_rep(p, m.quiver);
  std::vector<std::vector<int>> dom_off, cod_off;  // [summand][vertex]
  auto append = [&](FqRep& total, std::vector<std::vector<int>>& offsets, const FqRep& part) {
    offsets.push_back(total.dims);
    total = direct_sum(total, part);
  };
  for (int a = 0; a < q.arrow_count(); ++a) append(dom, dom_off, tensor(inj[static_cast<std::size_t>(q.head(a))], m.dim(q.tail(a))));
  for (int v = 0; v < q.vertices; ++v) append(cod, cod_off, tensor(inj[static_cast<std::size_t>(v)], m.dim(v)));
  Morphism nd;
  for (int j = 0; j < q.vertices; ++j) nd.emplace_back(cod.dim(j), dom.dim(j), p);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const int t = q.tail(a), h = q.head(a);
    const int mt = m.dim(t);
    const auto nu_a = nakayama_path_map(p, m.quiver, {a}, t, h);  // I_h -> I_t
    for (int j = 0; j < q.vertices; ++j) {
      const auto ja = static_cast<std::size_t>(j);
      // nu(a) (x) id into summand t
      nd[ja].set_block(cod_off[static_cast<std::size_t>(t)][ja], dom_off[static_cast<std::size_t>(a)][ja],
                       kron(nu_a[ja], FpMat::identity(mt, p)));
      // -id (x) M_a into summand h
      const int ih = inj[static_cast<std::size_t>(h)].dim(j);
      nd[ja].set_block(cod_off[static_cast<std::size_t>(h)][ja], dom_off[static_cast<std::size_t>(a)][ja],
                       -kron(FpMat::identity(ih, p), m.map(a)));
    }
  }
  if (!is_morphism(dom, cod, nd)) throw InvariantViolation("nu(d) is not a morphism of representations");
  return kernel(dom, cod, nd).module;
}

inline FqRep tau_inv(const FqRep& m) {
  const auto opp = std::make_shared<const RepQuiver>(m.quiver->opposite());
  const FqRep t = tau(dual(m, opp));
  return dual(t, m.quiver);
}

// BGP reflections ----------------------------------------------------------------

// At a sink k: the new space at k is ker((+)_{a -> k} M_tail(a) -> M_k) and
// every arrow at k is reversed.
inline FqRep reflect_at_sink(const FqRep& m, int k) {
  const auto& q = *m.quiver;
  if (!q.is_sink(k)) throw InvalidInput("vertex " + std::to_string(k + 1) + " is not a sink of the representation quiver");
  auto nq = std::make_shared<const RepQuiver>(q.reversed_at(k));
  std::vector<int> incoming;
  FpMat phi(m.dim(k), 0, m.p);
  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.head(a) == k) {
      incoming.push_back(a);
      phi = hstack(phi, m.map(a));
    }
  const FpMat ker = nullspace(phi);
  std::vector<int> dims = m.dims;
  dims[static_cast<std::size_t>(k)] = ker.cols();
  FqRep out = rep_with_dims(m.p, nq, dims);
  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.head(a) != k) out.maps[static_cast<std::size_t>(a)] = m.map(a);
  int offset = 0;
  for (int a : incoming) {
    const int d = m.dim(q.tail(a));
    out.maps[static_cast<std::size_t>(a)] = ker.block(offset, 0, d, ker.cols());
    offset += d;
  }
  out.validate();
  return out;
}

// At a source k: the new space at k is coker(M_k -> (+)_{k -> a} M_head(a)).
inline FqRep reflect_at_source(const FqRep& m, int k) {
  const auto& q = *m.quiver;
  if (!q.is_source(k)) throw InvalidInput("vertex " + std::to_string(k + 1) + " is not a source of the representation quiver");
  auto nq = std::make_shared<const RepQuiver>(q.reversed_at(k));
  std::vector<int> outgoing;
  FpMat psi(0, m.dim(k), m.p);
  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.tail(a) == k) {
      outgoing.push_back(a);
      psi = vstack(psi, m.map(a));
    }
  // Projection onto coordinates complementary to the row-reduced image.
  const int total = psi.rows();
  const auto r = rref(psi.transpose());
  std::vector<bool> pivot(static_cast<std::size_t>(total), false);
  for (int c : r.pivots) pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> keep;
  for (int c = 0; c < total; ++c)
    if (!pivot[static_cast<std::size_t>(c)]) keep.push_back(c);
  FpMat pi(static_cast<int>(keep.size()), total, m.p);
  for (std::size_t t = 0; t < keep.size(); ++t) pi(static_cast<int>(t), keep[t]) = 1;
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t t = 0; t < keep.size(); ++t) {
      const fp_t x = r.rref(static_cast<int>(i), keep[t]);
      if (x) pi(static_cast<int>(t), r.pivots[i]) = static_cast<fp_t>((pi(static_cast<int>(t), r.pivots[i]) + m.p - x) % m.p);
    }
  std::vector<int> dims = m.dims;
  dims[static_cast<std::size_t>(k)] = static_cast<int>(keep.size());
  FqRep out = rep_with_dims(m.p, nq, dims);
  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.tail(a) != k) out.maps[static_cast<std::size_t>(a)] = m.map(a);
  int offset = 0;
  for (int a : outgoing) {
    const int d = m.dim(q.head(a));
    out.maps[static_cast<std::size_t>(a)] = pi.block(0, offset, pi.rows(), d);
    offset += d;
  }
  out.validate();
  return out;
}

// Catalogs -----------------------------------------------------------------------

// Every representation supported on `support` with total dimension in
// [1, bound], up to isomorphism, ordered by dimension vector.
inline std::vector<FqRep> enumerate_modules(fp_t p, QuiverPtr q, const std::vector<int>& support, int bound) {
  const auto& quiver = *q;
  std::vector<bool> in_support(static_cast<std::size_t>(quiver.vertices), false);
  for (int v : support) in_support[static_cast<std::size_t>(v)] = true;
  std::vector<std::vector<int>> dim_vectors;
  std::vector<int> cur(static_cast<std::size_t>(quiver.vertices), 0);
  std::function<void(std::size_t, int)> gen = [&](std::size_t idx, int left) {
    if (idx == support.size()) {
      if (left < bound) dim_vectors.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur[static_cast<std::size_t>(support[idx])] = d;
      gen(idx + 1, left - d);
    }
    cur[static_cast<std::size_t>(support[idx])] = 0;
  };
  gen(0, bound);
  std::sort(dim_vectors.begin(), dim_vectors.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  std::vector<FqRep> out;
  for (const auto& dims : dim_vectors) {
    FqRep base = rep_with_dims(p, q, dims);
    std::vector<std::tuple<int, int, int>> entries;  // arrow, row, col
    for (int a = 0; a < quiver.arrow_count(); ++a)
      for (int r = 0; r < base.map(a).rows(); ++r)
        for (int c = 0; c < base.map(a).cols(); ++c) entries.emplace_back(a, r, c);
    // Iso invariants narrow the classes to compare against.
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, std::vector<IsoClass>> buckets;
    std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> order;
    for_each_vector(static_cast<int>(entries.size()), p, [&](const std::vector<fp_t>& x) {
      FqRep rep = base;
      for (std::size_t t = 0; t < entries.size(); ++t) {
        const auto [a, r, c] = entries[t];
        rep.maps[static_cast<std::size_t>(a)](r, c) = x[t];
      }
      auto key = std::make_tuple(dim_hom(rep, rep), top_vector(rep), socle_vector(rep));
      auto& bucket = buckets[key];
      if (bucket.empty()) order.push_back(key);
      add_to_classes(bucket, rep);
      return true;
    });
    for (const auto& key : order)
      for (const auto& cls : buckets[key]) out.push_back(cls.representative);
  }
  return out;
}

inline std::vector<int> principal_vertices(int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) out.push_back(v);
  return out;
}

}  // namespace qca
