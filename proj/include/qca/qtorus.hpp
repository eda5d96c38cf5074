#pragma once

// The based quantum torus: finitely supported combinations of X^e, e in Z^m,
// with X^e X^f = v^{Lambda(e,f)} X^{e+f}.

#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qca/error.hpp"
#include "qca/int_matrix.hpp"
#include "qca/scalars.hpp"

namespace qca {

enum class Side { Left, Right };

template <class Ring>
class TorusElement {
 public:
  using Scalar = typename Ring::value_type;
  using Terms = std::map<IntVec, Scalar>;

  TorusElement(Ring ring, std::shared_ptr<const IntMatrix> lambda) : ring_(std::move(ring)), lambda_(std::move(lambda)) {
    if (!lambda_ || lambda_->rows() != lambda_->cols()) throw InvalidInput("torus needs a square Lambda");
  }

  static TorusElement monomial(Ring ring, std::shared_ptr<const IntMatrix> lambda, const IntVec& e) {
    TorusElement out(std::move(ring), std::move(lambda));
    out.check_rank(e);
    out.terms_.emplace(e, out.ring_.one());
    return out;
  }
  static TorusElement constant(Ring ring, std::shared_ptr<const IntMatrix> lambda, const Scalar& c) {
    TorusElement out(std::move(ring), std::move(lambda));
    if (!out.ring_.is_zero(c)) out.terms_.emplace(IntVec(static_cast<std::size_t>(out.rank()), 0), c);
    return out;
  }

  const Ring& ring() const { return ring_; }
  const std::shared_ptr<const IntMatrix>& lambda() const { return lambda_; }
  int rank() const { return lambda_->rows(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const IntVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  // Lex-largest term.
  std::pair<IntVec, Scalar> leading() const {
    if (terms_.empty()) throw InvalidInput("leading term of zero");
    return *terms_.rbegin();
  }

  TorusElement zero_like() const { return TorusElement(ring_, lambda_); }
  TorusElement one_like() const { return constant(ring_, lambda_, ring_.one()); }
  TorusElement monomial_like(const IntVec& e) const { return monomial(ring_, lambda_, e); }

  void add_term(const IntVec& e, const Scalar& c) {
    check_rank(e);
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  TorusElement& operator+=(const TorusElement& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TorusElement& operator-=(const TorusElement& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement operator-() const {
    TorusElement out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  TorusElement scaled(const Scalar& s) const {
    TorusElement out(ring_, lambda_);
    for (const auto& [e, c] : terms_) out.add_term(e, s * c);
    return out;
  }
  TorusElement times_v_power(int k) const {
    if (k == 0) return *this;
    TorusElement out(ring_, lambda_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, ring_.times_v_power(c, k));
    return out;
  }

  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    a.check_context(b);
    TorusElement out(a.ring_, a.lambda_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        const int twist = static_cast<int>(bilinear(*a.lambda_, ea, eb));
        out.add_term(vec_add(ea, eb), a.ring_.times_v_power(ca * cb, twist));
      }
    return out;
  }
  TorusElement& operator*=(const TorusElement& b) { return *this = *this * b; }

  TorusElement pow(int k) const {
    if (k < 0) throw InvalidInput("negative power of a torus element");
    TorusElement out = one_like();
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    a.check_context(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  bool same_context(const TorusElement& o) const { return lambda_.get() == o.lambda_.get() && ring_ == o.ring_; }

  void check_context(const TorusElement& o) const {
    if (lambda_.get() != o.lambda_.get()) throw ContextMismatch("torus elements over different Lambda");
    if (!(ring_ == o.ring_)) throw ContextMismatch("torus elements over different coefficient rings");
  }

  // Same terms, new Lambda of equal rank (used to move between tori that
  // share a lattice but were built separately).
  TorusElement rebased(std::shared_ptr<const IntMatrix> lambda) const {
    TorusElement out(ring_, std::move(lambda));
    if (out.rank() != rank()) throw ContextMismatch("rebase to a torus of different rank");
    out.terms_ = terms_;
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const std::string mono = "X[" + vec_to_string(e) + "]";
      if (c == ring_.one()) {
        out += (first ? "" : " + ") + mono;
      } else if (c == -ring_.one()) {
        out += (first ? "-" : " - ") + mono;
      } else {
        out += (first ? "" : " + ") + ("(" + qca::to_string(c) + ")*" + mono);
      }
      first = false;
    }
    return out;
  }

 private:
  void check_rank(const IntVec& e) const {
    if (static_cast<int>(e.size()) != rank())
      throw ContextMismatch("exponent of length " + std::to_string(e.size()) + " in a rank " + std::to_string(rank()) + " torus");
  }

  Ring ring_;
  std::shared_ptr<const IntMatrix> lambda_;
  Terms terms_;
};

using FormalElement = TorusElement<LaurentRing>;
using SpecElement = TorusElement<SqrtField>;

template <class Ring>
std::ostream& operator<<(std::ostream& os, const TorusElement<Ring>& x) {
  return os << x.to_string();
}

// Exact quotient z with z d = p (Side::Right) or d z = p (Side::Left).
//
// Lex order is a group order, so the leading term of z d is the product of
// leading terms. In addition, for every coordinate j the extreme j-values of
// p are the sums of those of z and d; candidate quotient exponents outside
// [min_j p - min_j d, max_j p - max_j d] prove that no quotient exists. This
// bounds the search and guarantees termination.
template <class Ring>
TorusElement<Ring> divide_exact(const TorusElement<Ring>& p, const TorusElement<Ring>& d, Side side) {
  p.check_context(d);
  if (d.is_zero()) throw NotExact("division by zero torus element");
  const int m = p.rank();
  TorusElement<Ring> quotient = p.zero_like();
  if (p.is_zero()) return quotient;
  IntVec lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    int pmin = 0, pmax = 0, dmin = 0, dmax = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      const int x = e[static_cast<std::size_t>(j)];
      pmin = first ? x : std::min(pmin, x);
      pmax = first ? x : std::max(pmax, x);
      first = false;
    }
    first = true;
    for (const auto& [e, c] : d.terms()) {
      const int x = e[static_cast<std::size_t>(j)];
      dmin = first ? x : std::min(dmin, x);
      dmax = first ? x : std::max(dmax, x);
      first = false;
    }
    lo[static_cast<std::size_t>(j)] = pmin - dmin;
    hi[static_cast<std::size_t>(j)] = pmax - dmax;
    if (lo[static_cast<std::size_t>(j)] > hi[static_cast<std::size_t>(j)])
      throw NotExact("no torus quotient: support widths are incompatible");
  }
  const auto [dlead, dcoef] = d.leading();
  const auto& ring = p.ring();
  TorusElement<Ring> rem = p;
  while (!rem.is_zero()) {
    const auto [elead, ecoef] = rem.leading();
    IntVec c = vec_sub(elead, dlead);
    for (int j = 0; j < m; ++j) {
      const int x = c[static_cast<std::size_t>(j)];
      if (x < lo[static_cast<std::size_t>(j)] || x > hi[static_cast<std::size_t>(j)])
        throw NotExact("no torus quotient: leading-term cancellation leaves the Newton box");
    }
    const int twist = static_cast<int>(side == Side::Right ? bilinear(*p.lambda(), c, dlead) : bilinear(*p.lambda(), dlead, c));
    typename Ring::value_type s;
    try {
      s = ring.times_v_power(ring.divide(ecoef, dcoef), -twist);
    } catch (const NotExact&) {
      throw NotExact("no torus quotient: coefficient division is not exact");
    }
    TorusElement<Ring> step = p.zero_like();
    step.add_term(c, s);
    quotient += step;
    rem -= (side == Side::Right) ? step * d : d * step;
  }
  return quotient;
}

// M(c) = v^{sum_{i<j} c_i c_j lambda_ji} X_1^{c_1} ... X_m^{c_m} for c >= 0,
// extended to mixed signs by M(c) = v^{Lambda(c+, c-)} M(c+) M(c-)^{-1}.
template <class Ring>
TorusElement<Ring> normalized(const IntVec& c, const std::vector<TorusElement<Ring>>& vars, const IntMatrix& lambda_m) {
  const int m = static_cast<int>(vars.size());
  if (static_cast<int>(c.size()) != m || lambda_m.rows() != m || lambda_m.cols() != m)
    throw InvalidInput("normalized: size mismatch");
  if (m == 0) throw InvalidInput("normalized: no variables");
  IntVec plus(c.size()), minus(c.size());
  bool mixed = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    plus[i] = std::max(c[i], 0);
    minus[i] = std::max(-c[i], 0);
    if (minus[i] != 0) mixed = true;
  }
  auto positive = [&](const IntVec& a) {
    TorusElement<Ring> out = vars[0].one_like();
    long long twist = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        twist += static_cast<long long>(a[static_cast<std::size_t>(i)]) * a[static_cast<std::size_t>(j)] * lambda_m(j, i);
    for (int i = 0; i < m; ++i) {
      const int k = a[static_cast<std::size_t>(i)];
      for (int t = 0; t < k; ++t) out = out * vars[static_cast<std::size_t>(i)];
    }
    return out.times_v_power(static_cast<int>(twist));
  };
  if (!mixed) return positive(plus);
  TorusElement<Ring> num = positive(plus).times_v_power(static_cast<int>(bilinear(lambda_m, plus, minus)));
  return divide_exact(num, positive(minus), Side::Right);
}

inline FormalElement bar(const FormalElement& x) {
  FormalElement out = x.zero_like();
  for (const auto& [e, c] : x.terms()) out.add_term(e, c.bar());
  return out;
}

inline SpecElement specialize(const FormalElement& x, std::int64_t q0) {
  SpecElement out(SqrtField(q0), x.lambda());
  for (const auto& [e, c] : x.terms()) out.add_term(e, ev(c, q0));
  return out;
}

// Inverse of to_string(). Scalars inside parentheses use the ring's syntax.
namespace detail {

template <class Ring>
typename Ring::value_type parse_scalar(const Ring& ring, std::string_view text) {
  if constexpr (Ring::is_formal) {
    (void)ring;
    return parse_laurent(text);
  } else {
    return parse_sqrt(text, ring.q0);
  }
}

}  // namespace detail

template <class Ring>
TorusElement<Ring> parse_torus(std::string_view text, const Ring& ring, std::shared_ptr<const IntMatrix> lambda) {
  TorusElement<Ring> out(ring, std::move(lambda));
  const int m = out.rank();
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("cannot parse torus element '" + std::string(text) + "': " + why);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first) fail("empty");
      break;
    }
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      if (first && text[i] == '+') fail("leading '+'");
      negative = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;
    typename Ring::value_type coef = ring.one();
    if (i < text.size() && text[i] == '(') {
      int depth = 0;
      const std::size_t start = i + 1;
      for (; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')' && --depth == 0) break;
      }
      if (i >= text.size()) fail("unbalanced parenthesis");
      coef = detail::parse_scalar(ring, text.substr(start, i - start));
      ++i;
      skip();
      if (i >= text.size() || text[i] != '*') fail("expected '*' after coefficient");
      ++i;
      skip();
    }
    if (text.substr(i, 3) != "X[(") fail("expected 'X[('");
    i += 3;
    const std::size_t close = text.find(")]", i);
    if (close == std::string_view::npos) fail("missing ')]'");
    IntVec e;
    std::string body(text.substr(i, close - i));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        e.push_back(std::stoi(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) fail("bad exponent entry");
      } catch (const std::logic_error&) {
        fail("bad exponent entry");
      }
    }
    if (static_cast<int>(e.size()) != m) fail("exponent has wrong length");
    i = close + 2;
    out.add_term(e, negative ? -coef : coef);
  }
  return out;
}

}  // namespace qca
