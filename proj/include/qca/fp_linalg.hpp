#pragma once

// Dense linear algebra over a prime field F_p.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qca/error.hpp"

namespace qca {

using fp_t = std::uint32_t;

inline fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
  std::uint64_t base = a % p, out = 1;
  while (e) {
    if (e & 1) out = out * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<fp_t>(out);
}
inline fp_t fp_inv(fp_t a, fp_t p) {
  if (a % p == 0) throw NotInvertible("zero has no inverse in F_" + std::to_string(p));
  return fp_pow(a, p - 2, p);
}

class FpMat {
 public:
  FpMat() = default;
  FpMat(int rows, int cols, fp_t p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  }
  static FpMat identity(int n, fp_t p) {
    FpMat out(n, n, p);
    for (int i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }
  static FpMat from_rows(const std::vector<std::vector<long long>>& rows, int cols, fp_t p) {
    FpMat out(static_cast<int>(rows.size()), cols, p);
    for (int i = 0; i < out.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols) throw InvalidInput("ragged matrix rows");
      for (int j = 0; j < cols; ++j) {
        long long x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % static_cast<long long>(p);
        if (x < 0) x += p;
        out(i, j) = static_cast<fp_t>(x);
      }
    }
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  fp_t p() const { return p_; }
  fp_t& operator()(int i, int j) { return data_[idx(i, j)]; }
  fp_t operator()(int i, int j) const { return data_[idx(i, j)]; }

  bool is_zero() const {
    for (fp_t x : data_)
      if (x) return false;
    return true;
  }

  FpMat transpose() const {
    FpMat out(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend FpMat operator*(const FpMat& a, const FpMat& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("F_p product shape mismatch");
    FpMat out(a.rows_, b.cols_, a.p_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = a(i, k);
        if (!x) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) = static_cast<fp_t>((out(i, j) + x * b(k, j)) % a.p_);
      }
    return out;
  }
  friend FpMat operator+(const FpMat& a, const FpMat& b) {
    a.check_same_shape(b);
    FpMat out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] = static_cast<fp_t>((out.data_[t] + b.data_[t]) % a.p_);
    return out;
  }
  friend FpMat operator-(const FpMat& a, const FpMat& b) {
    a.check_same_shape(b);
    FpMat out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t)
      out.data_[t] = static_cast<fp_t>((out.data_[t] + a.p_ - b.data_[t]) % a.p_);
    return out;
  }
  FpMat operator-() const {
    FpMat out = *this;
    for (fp_t& x : out.data_) x = x ? p_ - x : 0;
    return out;
  }
  FpMat scaled(fp_t c) const {
    FpMat out = *this;
    for (fp_t& x : out.data_) x = static_cast<fp_t>(static_cast<std::uint64_t>(x) * c % p_);
    return out;
  }
  friend bool operator==(const FpMat& a, const FpMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
  }

  // Rows [r0, r0+nr), columns [c0, c0+nc).
  FpMat block(int r0, int c0, int nr, int nc) const {
    FpMat out(nr, nc, p_);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_block(int r0, int c0, const FpMat& b) {
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
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

  const std::vector<fp_t>& data() const { return data_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  void check_same_shape(const FpMat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || p_ != b.p_) throw InvalidInput("F_p matrix shape/field mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  fp_t p_ = 2;
  std::vector<fp_t> data_;
};

struct RrefResult {
  FpMat rref;               // full reduced row echelon form (zero rows at the bottom)
  std::vector<int> pivots;  // pivot column of each nonzero row
};

inline RrefResult rref(FpMat a) {
  const fp_t p = a.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    const fp_t inv = fp_inv(a(row, col), p);
    for (int j = 0; j < a.cols(); ++j) a(row, j) = static_cast<fp_t>(static_cast<std::uint64_t>(a(row, j)) * inv % p);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || !a(i, col)) continue;
      const std::uint64_t f = a(i, col);
      for (int j = 0; j < a.cols(); ++j)
        a(i, j) = static_cast<fp_t>((a(i, j) + (p - f) * a(row, j)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

inline int rank(const FpMat& a) { return static_cast<int>(rref(a).pivots.size()); }

// Columns form a basis of {x : a x = 0}.
inline FpMat nullspace(const FpMat& a) {
  const auto r = rref(a);
  const int n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  FpMat out(n, static_cast<int>(free_cols.size()), a.p());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const int f = free_cols[t];
    out(f, static_cast<int>(t)) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const fp_t x = r.rref(static_cast<int>(i), f);
      out(r.pivots[i], static_cast<int>(t)) = x ? a.p() - x : 0;
    }
  }
  return out;
}

inline FpMat inverse(const FpMat& a) {
  if (a.rows() != a.cols()) throw NotInvertible("non-square matrix");
  const int n = a.rows();
  FpMat aug(n, 2 * n, a.p());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, FpMat::identity(n, a.p()));
  auto r = rref(aug);
  if (static_cast<int>(r.pivots.size()) < n || (n > 0 && r.pivots[static_cast<std::size_t>(n) - 1] >= n))
    throw NotInvertible("singular matrix over F_" + std::to_string(a.p()));
  return r.rref.block(0, n, n, n);
}

inline bool is_invertible(const FpMat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

inline FpMat hstack(const FpMat& a, const FpMat& b) {
  if (a.rows() != b.rows()) throw InvalidInput("hstack row mismatch");
  FpMat out(a.rows(), a.cols() + b.cols(), a.p());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}
inline FpMat vstack(const FpMat& a, const FpMat& b) {
  if (a.cols() != b.cols()) throw InvalidInput("vstack column mismatch");
  FpMat out(a.rows() + b.rows(), a.cols(), a.p());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}
inline FpMat kron(const FpMat& a, const FpMat& b) {
  FpMat out(a.rows() * b.rows(), a.cols() * b.cols(), a.p());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const std::uint64_t x = a(i, j);
      if (!x) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = static_cast<fp_t>(x * b(k, l) % a.p());
    }
  return out;
}

// Basis (as columns) of the column space, taken from a's own columns.
inline FpMat column_space(const FpMat& a) {
  const auto r = rref(a);
  FpMat out(a.rows(), static_cast<int>(r.pivots.size()), a.p());
  for (std::size_t t = 0; t < r.pivots.size(); ++t)
    for (int i = 0; i < a.rows(); ++i) out(i, static_cast<int>(t)) = a(i, r.pivots[t]);
  return out;
}

}  // namespace qca
