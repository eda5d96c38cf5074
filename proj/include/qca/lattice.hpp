#pragma once

// Ice quivers and the integer data attached to them: B~, R~, I~, the
// compatible skew form Lambda and the Euler form.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/error.hpp"
#include "qca/int_matrix.hpp"

namespace qca {

struct Arrow {
  int source = 0;  // 1-based
  int target = 0;
  friend bool operator==(const Arrow& a, const Arrow& b) { return a.source == b.source && a.target == b.target; }
};

// Vertices 1..n are exchangeable, n+1..m frozen.
struct IceQuiver {
  int m = 0;
  int n = 0;
  std::vector<Arrow> arrows;

  bool is_frozen(int vertex) const { return vertex > n; }

  int count(int from, int to) const {
    return static_cast<int>(std::count(arrows.begin(), arrows.end(), Arrow{from, to}));
  }

  void validate() const {
    if (m < 1 || n < 1 || n > m) throw InvalidInput("ice quiver needs 1 <= n <= m");
    for (const auto& a : arrows) {
      if (a.source < 1 || a.source > m || a.target < 1 || a.target > m)
        throw InvalidInput("arrow endpoint out of range: " + std::to_string(a.source) + "->" + std::to_string(a.target));
      if (a.source == a.target) throw InvalidInput("loop at vertex " + std::to_string(a.source));
      if (is_frozen(a.source) && is_frozen(a.target))
        throw InvalidInput("arrow between frozen vertices " + std::to_string(a.source) + "->" + std::to_string(a.target));
    }
    // Kahn's algorithm.
    std::vector<int> indegree(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& a : arrows) ++indegree[static_cast<std::size_t>(a.target)];
    std::vector<int> ready;
    for (int v = 1; v <= m; ++v)
      if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& a : arrows)
        if (a.source == v && --indegree[static_cast<std::size_t>(a.target)] == 0) ready.push_back(a.target);
    }
    if (seen != m) throw InvalidInput("quiver has a directed cycle");
  }

  bool is_sink(int vertex) const {
    return std::none_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.source == vertex; });
  }
  bool is_source(int vertex) const {
    return std::none_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.target == vertex; });
  }

  friend bool operator==(const IceQuiver& a, const IceQuiver& b) {
    return a.m == b.m && a.n == b.n && a.arrows == b.arrows;
  }
};

struct QuiverMatrices {
  IntMatrix btilde;  // m x n
  IntMatrix rtilde;  // m x n
  IntMatrix itilde;  // m x n
  IntMatrix euler;   // n x n, I - R
};

inline QuiverMatrices matrices_from_quiver(const IceQuiver& q) {
  q.validate();
  QuiverMatrices out{IntMatrix(q.m, q.n), IntMatrix(q.m, q.n), IntMatrix(q.m, q.n), IntMatrix::identity(q.n)};
  for (int i = 1; i <= q.m; ++i)
    for (int j = 1; j <= q.n; ++j) {
      out.btilde(i - 1, j - 1) = q.count(i, j) - q.count(j, i);
      out.rtilde(i - 1, j - 1) = q.count(j, i);
      if (i == j) out.itilde(i - 1, j - 1) = 1;
    }
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) out.euler(i, j) -= out.rtilde(i, j);
  return out;
}

// Skew-symmetric integer Lambda with Lambda (-B~) = I~, entries minimized in
// lexicographic absolute value over the upper triangle (row-major), positive
// on ties. nullopt if no integer solution exists.
inline std::optional<IntMatrix> solve_lambda(const IntMatrix& btilde, const IntMatrix& itilde) {
  const int m = btilde.rows();
  const int n = btilde.cols();
  if (itilde.rows() != m || itilde.cols() != n) throw InvalidInput("solve_lambda: B~ and I~ shapes differ");
  if (n > m) throw InvalidInput("solve_lambda: B~ must be m x n with n <= m");
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) unknowns.emplace_back(i, j);
  if (unknowns.empty()) {
    // 1x1 Lambda is zero; feasible only when I~ is zero, which never happens for n >= 1.
    if (itilde.is_zero()) return IntMatrix(m, m);
    return std::nullopt;
  }
  BigMat a;
  BigVec c;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) {
      BigVec row(unknowns.size(), 0);
      // sum_j Lambda_ij * (-b_jk)
      for (std::size_t t = 0; t < unknowns.size(); ++t) {
        const auto [r, s] = unknowns[t];
        if (r == i) row[t] += -btilde(s, k);
        if (s == i) row[t] -= -btilde(r, k);
      }
      a.push_back(std::move(row));
      c.emplace_back(itilde(i, k));
    }
  auto x = solve_integer_lexmin(a, c);
  if (!x) return std::nullopt;
  IntMatrix lambda(m, m);
  for (std::size_t t = 0; t < unknowns.size(); ++t) {
    const auto [r, s] = unknowns[t];
    if (!(*x)[t].fits_sint_p()) throw InvariantViolation("Lambda entry overflows int");
    const int v = static_cast<int>((*x)[t].get_si());
    lambda(r, s) = v;
    lambda(s, r) = -v;
  }
  return lambda;
}

struct CompatibilityReport {
  bool ok = false;
  std::vector<int> d;  // diagonal of D when B~^T Lambda = (D | 0)
  std::string diagnostic;
};

inline CompatibilityReport check_compatible(const IntMatrix& lambda, const IntMatrix& btilde) {
  CompatibilityReport out;
  const int m = btilde.rows();
  const int n = btilde.cols();
  if (lambda.rows() != m || lambda.cols() != m) {
    out.diagnostic = "Lambda is " + std::to_string(lambda.rows()) + "x" + std::to_string(lambda.cols()) +
                     ", expected " + std::to_string(m) + "x" + std::to_string(m);
    return out;
  }
  if (!(lambda.transpose() == -lambda)) {
    out.diagnostic = "Lambda is not skew-symmetric";
    return out;
  }
  const IntMatrix prod = btilde.transpose() * lambda;  // n x m
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const int x = prod(i, j);
      if (i == j) {
        if (x <= 0) {
          out.diagnostic = "B~^T Lambda has non-positive diagonal entry " + std::to_string(x) + " at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          return out;
        }
      } else if (x != 0) {
        out.diagnostic = "B~^T Lambda has off-diagonal entry " + std::to_string(x) + " at (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ")";
        return out;
      }
    }
  out.ok = true;
  for (int i = 0; i < n; ++i) out.d.push_back(prod(i, i));
  bool unit = std::all_of(out.d.begin(), out.d.end(), [](int x) { return x == 1; });
  out.diagnostic = unit ? "D = I" + std::to_string(n) : "D = diag" + vec_to_string(out.d);
  return out;
}

// Everything the torus and CC map need about one ice quiver.
struct LatticeData {
  IceQuiver quiver;
  IntMatrix btilde;
  IntMatrix rtilde;
  IntMatrix itilde;
  IntMatrix euler;       // n x n
  IntMatrix euler_full;  // m x m, I - R_full with R_full(i,j) = #(j->i)
  std::shared_ptr<const IntMatrix> lambda;
  std::vector<int> d;

  int m() const { return quiver.m; }
  int n() const { return quiver.n; }
  bool unit_d() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 1; });
  }
};

inline LatticeData make_lattice(const IceQuiver& q, std::optional<IntMatrix> lambda = std::nullopt) {
  auto mats = matrices_from_quiver(q);
  LatticeData out;
  out.quiver = q;
  out.btilde = mats.btilde;
  out.rtilde = mats.rtilde;
  out.itilde = mats.itilde;
  out.euler = mats.euler;
  out.euler_full = IntMatrix::identity(q.m);
  for (int i = 1; i <= q.m; ++i)
    for (int j = 1; j <= q.m; ++j) out.euler_full(i - 1, j - 1) -= q.count(j, i);
  if (!lambda) {
    lambda = solve_lambda(mats.btilde, mats.itilde);
    if (!lambda) throw InvalidInput("no integer Lambda with Lambda(-B~) = I~ exists for this quiver");
  }
  auto report = check_compatible(*lambda, mats.btilde);
  if (!report.ok) throw InvalidInput("Lambda is not compatible with B~: " + report.diagnostic);
  out.d = report.d;
  out.lambda = std::make_shared<const IntMatrix>(std::move(*lambda));
  return out;
}

// <e, f> = e^T (I - R) f on the principal part.
inline long long euler_form(const LatticeData& lat, const IntVec& e, const IntVec& f) {
  return bilinear(lat.euler, e, f);
}

// Euler form on dimension vectors over all m vertices.
inline long long euler_form_full(const LatticeData& lat, const IntVec& e, const IntVec& f) {
  return bilinear(lat.euler_full, e, f);
}

inline long long lambda_form(const IntMatrix& lambda, const IntVec& e, const IntVec& f) {
  return bilinear(lambda, e, f);
}

// (I~ - R~) x for a principal vector x.
inline IntVec i_minus_r(const LatticeData& lat, const IntVec& x) { return (lat.itilde - lat.rtilde) * x; }

inline IntVec btilde_times(const LatticeData& lat, const IntVec& x) { return lat.btilde * x; }

// Reverse every arrow at vertex k.
inline IceQuiver reflect_quiver(const IceQuiver& q, int k) {
  if (k < 1 || k > q.n) throw InvalidInput("reflection vertex must be exchangeable");
  if (!q.is_sink(k) && !q.is_source(k)) throw InvalidInput("vertex " + std::to_string(k) + " is neither a sink nor a source");
  IceQuiver out = q;
  for (auto& a : out.arrows)
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  out.validate();
  return out;
}

}  // namespace qca
