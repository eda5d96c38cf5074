#pragma once

// Bases at desk scale: standard monomials, the rigid-object basis in finite
// type, the Kronecker basis with X_delta, and a leading-term check that
// certifies linear independence.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/ccmap.hpp"
#include "qca/error.hpp"
#include "qca/finrep.hpp"
#include "qca/int_matrix.hpp"
#include "qca/lattice.hpp"
#include "qca/qtorus.hpp"
#include "qca/scalars.hpp"

namespace qca {

struct BasisElement {
  std::string label;
  std::optional<IntVec> index;      // d, for index-labelled families
  std::optional<CCObject> object;   // the object whose CC value this is, if any
  SpecElement value;
};

// prod_i X_{S_i}^{d_i^+} X_{P_i[1]}^{d_i^-}, ascending in i.
inline SpecElement standard_monomial(const IntVec& d, const LatticeData& lat, fp_t p) {
  if (static_cast<int>(d.size()) != lat.n()) throw InvalidInput("standard_monomial needs an n-vector");
  const auto rq = rep_quiver(lat.quiver);
  SpecElement out = SpecElement::monomial(SqrtField(p), lat.lambda, IntVec(static_cast<std::size_t>(lat.m()), 0));
  for (int i = 0; i < lat.n(); ++i) {
    const int di = d[static_cast<std::size_t>(i)];
    if (di > 0) out = out * cc(simple(p, rq, i), lat).pow(di);
    if (di < 0) out = out * cc_shifted(unit_vector(lat.m(), i), lat, p).pow(-di);
  }
  return out;
}

// Rigid indecomposables of the principal quiver ------------------------------------

namespace detail {

inline QuiverPtr principal_quiver(const LatticeData& lat, std::vector<int>& arrow_of) {
  RepQuiver out{lat.n(), {}};
  const auto full = rep_quiver(lat.quiver);
  arrow_of.clear();
  for (int a = 0; a < full->arrow_count(); ++a)
    if (full->tail(a) < lat.n() && full->head(a) < lat.n()) {
      out.arrows.push_back(full->arrows[static_cast<std::size_t>(a)]);
      arrow_of.push_back(a);
    }
  return std::make_shared<const RepQuiver>(std::move(out));
}

// Pads a principal-quiver representation with zeros at the frozen vertices.
inline FqRep to_full(const FqRep& m, const LatticeData& lat, const std::vector<int>& arrow_of) {
  const auto full = rep_quiver(lat.quiver);
  std::vector<int> dims = m.dims;
  dims.resize(static_cast<std::size_t>(lat.m()), 0);
  FqRep out = rep_with_dims(m.p, full, dims);
  for (std::size_t a = 0; a < arrow_of.size(); ++a) out.maps[static_cast<std::size_t>(arrow_of[a])] = m.maps[a];
  return out;
}

}  // namespace detail

// Preprojectives tau^-k P_i and preinjectives tau^k I_i of kQ with total
// dimension at most max_dim, as modules over the full ice quiver.
inline std::vector<FqRep> rigid_indecomposables(const LatticeData& lat, fp_t p, int max_dim) {
  std::vector<int> arrow_of;
  const auto q = detail::principal_quiver(lat, arrow_of);
  std::vector<FqRep> found;
  auto add = [&](const FqRep& x) {
    for (const auto& y : found)
      if (is_iso(x, y)) return;
    found.push_back(x);
  };
  for (int i = 0; i < lat.n(); ++i) {
    FqRep x = projective(p, q, i);
    while (!x.is_zero() && x.total_dim() <= max_dim) {
      add(x);
      x = tau_inv(x);
    }
    x = injective(p, q, i);
    while (!x.is_zero() && x.total_dim() <= max_dim) {
      add(x);
      x = tau(x);
    }
  }
  std::sort(found.begin(), found.end(), [](const FqRep& a, const FqRep& b) {
    return std::make_pair(a.total_dim(), a.dims) < std::make_pair(b.total_dim(), b.dims);
  });
  std::vector<FqRep> out;
  for (const auto& x : found) out.push_back(detail::to_full(x, lat, arrow_of));
  return out;
}

// A rigid module with principal dimension vector d, assembled from at most n
// pairwise Ext-orthogonal rigid indecomposables. nullopt if none exists.
inline std::optional<FqRep> rigid_module_with_dims(const LatticeData& lat, fp_t p, const IntVec& d) {
  int total = 0;
  for (int x : d) {
    if (x < 0) throw InvalidInput("dimension vector must be nonnegative");
    total += x;
  }
  const auto rq = rep_quiver(lat.quiver);
  std::vector<int> full = d;
  full.resize(static_cast<std::size_t>(lat.m()), 0);
  if (total == 0) return rep_with_dims(p, rq, full);
  std::vector<FqRep> inds;
  for (const auto& x : rigid_indecomposables(lat, p, total)) {
    bool fits = true;
    for (int v = 0; v < lat.n(); ++v)
      if (x.dim(v) > d[static_cast<std::size_t>(v)]) fits = false;
    if (fits) inds.push_back(x);
  }
  std::vector<std::pair<std::size_t, int>> picked;  // (index, multiplicity)
  std::optional<FqRep> result;
  std::function<void(std::size_t, std::vector<int>)> search = [&](std::size_t start, std::vector<int> left) {
    if (result) return;
    if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
      FqRep out = rep_with_dims(p, rq, std::vector<int>(static_cast<std::size_t>(lat.m()), 0));
      for (const auto& [i, k] : picked) out = direct_sum(out, power(inds[i], k));
      result = out;
      return;
    }
    if (static_cast<int>(picked.size()) == lat.n()) return;
    for (std::size_t i = start; i < inds.size(); ++i) {
      bool orthogonal = true;
      for (const auto& [j, k] : picked)
        if (dim_ext(inds[i], inds[j]) != 0 || dim_ext(inds[j], inds[i]) != 0) orthogonal = false;
      if (!orthogonal) continue;
      std::vector<int> rest = left;
      for (int k = 1;; ++k) {
        bool ok = true;
        for (int v = 0; v < lat.n(); ++v) {
          rest[static_cast<std::size_t>(v)] -= inds[i].dim(v);
          if (rest[static_cast<std::size_t>(v)] < 0) ok = false;
        }
        if (!ok) break;
        picked.emplace_back(i, k);
        search(i + 1, rest);
        picked.pop_back();
        if (result) return;
      }
    }
  };
  search(0, d);
  return result;
}

// Finite type ----------------------------------------------------------------------

// Rigid objects M0 (+) P[1] with P supported on exchangeable vertices and
// total size dim M0 + sum(shift) <= bound, with their CC values.
inline std::vector<BasisElement> finite_type_basis(const LatticeData& lat, fp_t p, int bound) {
  const auto rq = rep_quiver(lat.quiver);
  std::vector<BasisElement> out;
  std::vector<FqRep> modules{zero_rep(p, rq)};
  for (auto& m : enumerate_modules(p, rq, principal_vertices(lat.n()), bound))
    if (!m.is_zero()) modules.push_back(std::move(m));
  for (const auto& m : modules) {
    if (!is_rigid(m)) continue;
    const int room = bound - m.total_dim();
    std::vector<int> shift(static_cast<std::size_t>(lat.m()), 0);
    while (true) {
      CCObject obj{m, shift};
      if (is_rigid_object(obj)) {
        std::string label = "dims " + vec_to_string(m.dims);
        if (std::any_of(shift.begin(), shift.end(), [](int x) { return x; })) label += " + P" + vec_to_string(shift) + "[1]";
        out.push_back({label, std::nullopt, obj, cc(obj, lat)});
      }
      int i = 0;
      while (i < lat.n()) {
        ++shift[static_cast<std::size_t>(i)];
        int used = 0;
        for (int s : shift) used += s;
        if (used <= room) break;
        shift[static_cast<std::size_t>(i++)] = 0;
      }
      if (i == lat.n()) break;
    }
  }
  return out;
}

// Kronecker --------------------------------------------------------------------------

// R_p(1) for the degree-one point p = [a : b] of the projective line: both
// spaces one-dimensional, the two arrows acting by a and b.
inline FqRep kronecker_regular(const LatticeData& lat, fp_t p, fp_t a, fp_t b) {
  if (lat.n() != 2 || lat.quiver.count(1, 2) + lat.quiver.count(2, 1) != 2)
    throw InvalidInput("not a Kronecker ice quiver");
  if (a % p == 0 && b % p == 0) throw InvalidInput("[0 : 0] is not a point");
  const auto rq = rep_quiver(lat.quiver);
  std::vector<int> dims(static_cast<std::size_t>(lat.m()), 0);
  dims[0] = dims[1] = 1;
  FqRep out = rep_with_dims(p, rq, dims);
  int seen = 0;
  for (int k = 0; k < rq->arrow_count(); ++k)
    if (rq->tail(k) < 2 && rq->head(k) < 2) out.maps[static_cast<std::size_t>(k)](0, 0) = (seen++ == 0 ? a : b) % p;
  return out;
}

// All points of P^1(F_p), as [1 : b] followed by [0 : 1].
inline std::vector<std::pair<fp_t, fp_t>> projective_line(fp_t p) {
  std::vector<std::pair<fp_t, fp_t>> out;
  for (fp_t b = 0; b < p; ++b) out.emplace_back(1, b);
  out.emplace_back(0, 1);
  return out;
}

// For every d in [-box, box]^2: X_delta^k when d = (k, k) with k >= 1, and
// otherwise the CC value of the rigid object with module dims d^+ and shift
// d^-.
inline std::vector<BasisElement> kronecker_basis(const LatticeData& lat, fp_t p, int box) {
  if (box < 0) throw InvalidInput("negative box");
  if (box > 6) throw BudgetExceeded("Kronecker box larger than 6");
  const SpecElement delta = cc(kronecker_regular(lat, p, 1, 0), lat);
  std::vector<BasisElement> out;
  for (int d1 = -box; d1 <= box; ++d1)
    for (int d2 = -box; d2 <= box; ++d2) {
      const IntVec d{d1, d2};
      const std::string label = "d " + vec_to_string(d);
      if (d1 == d2 && d1 >= 1) {
        out.push_back({label, d, std::nullopt, delta.pow(d1)});
        continue;
      }
      const IntVec plus{std::max(d1, 0), std::max(d2, 0)};
      const auto m = rigid_module_with_dims(lat, p, plus);
      if (!m) throw InvariantViolation("no rigid Kronecker module with dims " + vec_to_string(plus));
      std::vector<int> shift(static_cast<std::size_t>(lat.m()), 0);
      shift[0] = std::max(-d1, 0);
      shift[1] = std::max(-d2, 0);
      CCObject obj{*m, shift};
      out.push_back({label, d, obj, cc(obj, lat)});
    }
  return out;
}

// Leading terms -------------------------------------------------------------------------

struct LeadingTerm {
  std::string label;
  IntVec exponent;  // full exponent of the extremal term
  SqrtElement coefficient;
};

struct TriangularityReport {
  bool ok = true;
  std::vector<LeadingTerm> leading;
  std::vector<std::string> problems;
};

// For each element: the principal exponents maximizing epsilon must be
// unique and carry a single term whose coefficient is +-(sqrt q0)^k (the
// frozen part is a monomial). The extremal principal exponents must be
// pairwise distinct across elements.
inline TriangularityReport triangularity_check(const std::vector<BasisElement>& elements, const LatticeData& lat,
                                               const IntVec& grading) {
  if (static_cast<int>(grading.size()) != lat.n()) throw InvalidInput("grading must be an n-vector");
  TriangularityReport out;
  std::map<IntVec, std::string> owner;
  for (const auto& el : elements) {
    if (el.value.is_zero()) {
      out.ok = false;
      out.problems.push_back(el.label + ": zero element");
      continue;
    }
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : el.value.terms()) {
      long long s = 0;
      for (int i = 0; i < lat.n(); ++i) s += static_cast<long long>(grading[static_cast<std::size_t>(i)]) * e[static_cast<std::size_t>(i)];
      if (first || s > best) best = s;
      first = false;
    }
    std::vector<std::pair<IntVec, SqrtElement>> top;
    for (const auto& [e, c] : el.value.terms()) {
      long long s = 0;
      for (int i = 0; i < lat.n(); ++i) s += static_cast<long long>(grading[static_cast<std::size_t>(i)]) * e[static_cast<std::size_t>(i)];
      if (s == best) top.emplace_back(e, c);
    }
    if (top.size() != 1) {
      out.ok = false;
      out.problems.push_back(el.label + ": " + std::to_string(top.size()) + " terms share the extremal grade");
      continue;
    }
    const auto& [e, c] = top.front();
    out.leading.push_back({el.label, e, c});
    if (!is_unit_monomial(c)) {
      out.ok = false;
      out.problems.push_back(el.label + ": extremal coefficient " + c.to_string() + " is not a unit");
    }
    const IntVec principal(e.begin(), e.begin() + lat.n());
    auto [it, inserted] = owner.emplace(principal, el.label);
    if (!inserted) {
      out.ok = false;
      out.problems.push_back("extremal exponent " + vec_to_string(principal) + " shared by " + it->second + " and " + el.label);
    }
  }
  return out;
}

}  // namespace qca
