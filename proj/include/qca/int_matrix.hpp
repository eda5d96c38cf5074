#pragma once

// Small dense integer matrices and an exact integer linear solver
// (column Hermite form with a unimodular transform, arbitrary precision).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qca/error.hpp"

namespace qca {

using IntVec = std::vector<int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, int fill = 0) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
  }
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw InvalidInput("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  static IntMatrix identity(int n) {
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix out(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix rows");
      for (int j = 0; j < c; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }

  IntMatrix transpose() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  IntVec column(int j) const {
    IntVec out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
    return out;
  }
  IntVec row(int i) const {
    IntVec out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (int x : data_)
      if (x != 0) return false;
    return true;
  }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const int x = a(i, k);
        if (x == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum shape mismatch");
    IntMatrix out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] += b.data_[t];
    return out;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference shape mismatch");
    IntMatrix out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] -= b.data_[t];
    return out;
  }
  IntMatrix operator-() const {
    IntMatrix out = *this;
    for (int& x : out.data_) x = -x;
    return out;
  }

  IntVec operator*(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InvalidInput("matrix-vector shape mismatch");
    IntVec out(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  IntVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}
inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  IntVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}
inline IntVec vec_scale(int c, IntVec a) {
  for (int& x : a) x *= c;
  return a;
}
inline IntVec unit_vector(int size, int i) {
  IntVec out(static_cast<std::size_t>(size), 0);
  out[static_cast<std::size_t>(i)] = 1;
  return out;
}
inline std::string vec_to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// x^T A y
inline long long bilinear(const IntMatrix& a, const IntVec& x, const IntVec& y) {
  if (static_cast<int>(x.size()) != a.rows() || static_cast<int>(y.size()) != a.cols())
    throw InvalidInput("bilinear form shape mismatch");
  long long total = 0;
  for (int i = 0; i < a.rows(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    long long row = 0;
    for (int j = 0; j < a.cols(); ++j) row += static_cast<long long>(a(i, j)) * y[static_cast<std::size_t>(j)];
    total += row * x[static_cast<std::size_t>(i)];
  }
  return total;
}

// Integer linear systems ---------------------------------------------------------

using BigVec = std::vector<mpz_class>;
using BigMat = std::vector<BigVec>;  // row-major

// Solution set x0 + kernel * Z^k of A x = c over the integers.
struct IntegerSolution {
  BigVec particular;
  BigMat kernel;  // columns stored as vectors: kernel[t] is the t-th generator
};

namespace detail {

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

// Column Hermite reduction: A U = H with U unimodular and H in column echelon
// form. Then A x = c is solved through H y = c, x = U y.
inline std::optional<IntegerSolution> solve_integer_system(const BigMat& a, const BigVec& c) {
  const std::size_t rows = a.size();
  if (c.size() != rows) throw InvalidInput("integer system: right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a)
    if (r.size() != cols) throw InvalidInput("integer system: ragged matrix");

  BigMat h = a;
  BigMat u(cols, BigVec(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& r : h) std::swap(r[x], r[y]);
    for (auto& r : u) std::swap(r[x], r[y]);
  };
  // col[y] -= f * col[x]
  auto axpy_cols = [&](std::size_t y, std::size_t x, const mpz_class& f) {
    if (f == 0) return;
    for (auto& r : h) r[y] -= f * r[x];
    for (auto& r : u) r[y] -= f * r[x];
  };
  auto negate_col = [&](std::size_t x) {
    for (auto& r : h) r[x] = -r[x];
    for (auto& r : u) r[x] = -r[x];
  };

  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows && rank < cols; ++i) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = rank; j < cols; ++j)
        if (h[i][j] != 0 && (best == cols || abs(h[i][j]) < abs(h[i][best]))) best = j;
      if (best == cols) break;
      swap_cols(rank, best);
      bool done = true;
      for (std::size_t j = rank + 1; j < cols; ++j) {
        if (h[i][j] == 0) continue;
        axpy_cols(j, rank, detail::floor_div(h[i][j], h[i][rank]));
        if (h[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (h[i][rank] == 0) continue;
    if (h[i][rank] < 0) negate_col(rank);
    pivot_rows.push_back(i);
    ++rank;
  }

  BigVec y(cols, 0);
  for (std::size_t t = 0; t < rank; ++t) {
    const std::size_t row = pivot_rows[t];
    mpz_class rhs = c[row];
    for (std::size_t s = 0; s < t; ++s) rhs -= h[row][s] * y[s];
    if (!mpz_divisible_p(rhs.get_mpz_t(), h[row][t].get_mpz_t())) return std::nullopt;
    y[t] = rhs / h[row][t];
  }
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lhs = 0;
    for (std::size_t s = 0; s < rank; ++s) lhs += h[i][s] * y[s];
    if (lhs != c[i]) return std::nullopt;
  }

  IntegerSolution out;
  out.particular.assign(cols, 0);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t s = 0; s < rank; ++s) out.particular[r] += u[r][s] * y[s];
  for (std::size_t t = rank; t < cols; ++t) {
    BigVec gen(cols);
    for (std::size_t r = 0; r < cols; ++r) gen[r] = u[r][t];
    out.kernel.push_back(std::move(gen));
  }
  return out;
}

// Among all integer solutions, the one minimizing (|x_0|, |x_1|, ...)
// lexicographically; ties at a coordinate go to the positive value.
inline std::optional<BigVec> solve_integer_lexmin(const BigMat& a, const BigVec& c) {
  auto sol = solve_integer_system(a, c);
  if (!sol) return std::nullopt;
  BigVec x = sol->particular;
  BigMat kernel = sol->kernel;
  const std::size_t n = x.size();
  for (std::size_t j = 0; j < n && !kernel.empty(); ++j) {
    mpz_class g = 0;
    for (const auto& gen : kernel) g = gcd(g, gen[j]);
    if (g == 0) continue;
    // Reachable values: x_j + g*Z. Pick the one nearest 0, positive on ties.
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x[j].get_mpz_t(), g.get_mpz_t());  // 0 <= r < g
    mpz_class target = (2 * r <= g) ? r : r - g;
    // Restrict to kernel combinations z with sum_t z_t gen_t[j] = target - x_j.
    BigMat row{BigVec(kernel.size())};
    for (std::size_t t = 0; t < kernel.size(); ++t) row[0][t] = kernel[t][j];
    auto step = solve_integer_system(row, BigVec{target - x[j]});
    if (!step) throw InvariantViolation("lexmin: coordinate target unexpectedly unreachable");
    for (std::size_t t = 0; t < kernel.size(); ++t)
      for (std::size_t r2 = 0; r2 < n; ++r2) x[r2] += step->particular[t] * kernel[t][r2];
    BigMat next;
    for (const auto& comb : step->kernel) {
      BigVec gen(n, 0);
      for (std::size_t t = 0; t < kernel.size(); ++t)
        for (std::size_t r2 = 0; r2 < n; ++r2) gen[r2] += comb[t] * kernel[t][r2];
      next.push_back(std::move(gen));
    }
    kernel = std::move(next);
  }
  return x;
}

}  // namespace qca
