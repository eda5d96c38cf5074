#pragma once

// Exact coefficient rings.
//
//   LaurentPoly  -- Z[v, v^-1] with v = q^{1/2}; the formal coefficient ring.
//   SqrtElement  -- a + b*sqrt(q0) with a, b rational and q0 prime; the
//                   specialized field Q(sqrt(q0)) receiving v -> sqrt(q0).
//
// Each ring comes with a small "ring object" (LaurentRing, SqrtField) that
// knows how to build zero, one and powers of v. Generic code (the quantum
// torus, quantum binomials) is written against that interface.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qca/error.hpp"

namespace qca {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(0, mpz_class(c));
  }
  LaurentPoly(const mpz_class& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(0, c);
  }

  static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1) {
    LaurentPoly out;
    if (coeff != 0) out.terms_.emplace(exponent, coeff);
    return out;
  }

  const std::map<int, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  // A unit of Z[v^{+-1}] is exactly +-v^k.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  mpz_class coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Multiplication by v^k.
  LaurentPoly shifted(int k) const {
    if (k == 0) return *this;
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
  }

  // v -> v^{-1}.
  LaurentPoly bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  LaurentPoly inverse() const {
    if (!is_unit()) throw NotInvertible("Laurent polynomial " + to_string() + " is not a unit");
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, c);
  }

  // Exact quotient a / b in Z[v^{+-1}]; throws NotExact otherwise.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotExact("division by zero Laurent polynomial");
    LaurentPoly quotient;
    LaurentPoly rem = a;
    const int b_top = b.max_degree();
    const mpz_class& b_lead = b.terms_.rbegin()->second;
    const int b_span = b_top - b.min_degree();
    while (!rem.is_zero()) {
      if (rem.max_degree() - rem.min_degree() < b_span)
        throw NotExact("Laurent division " + a.to_string() + " / " + b.to_string() + " is not exact");
      const int top = rem.max_degree();
      const mpz_class& lead = rem.terms_.rbegin()->second;
      if (!mpz_divisible_p(lead.get_mpz_t(), b_lead.get_mpz_t()))
        throw NotExact("Laurent division " + a.to_string() + " / " + b.to_string() + " is not exact");
      mpz_class factor = lead / b_lead;
      LaurentPoly step = monomial(top - b_top, factor);
      quotient += step;
      rem -= step * b;
    }
    return quotient;
  }

  // Descending exponents, e.g. "2*v^3 - v^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      mpz_class c = it->second;
      const int e = it->first;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      mpz_class a = abs(c);
      if (e == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  void add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, mpz_class> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.to_string(); }

// a + b*sqrt(q0), q0 prime.
class SqrtElement {
 public:
  SqrtElement() = default;
  SqrtElement(std::int64_t q0, mpq_class a, mpq_class b = 0) : q0_(q0), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  std::int64_t q0() const { return q0_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  SqrtElement& operator+=(const SqrtElement& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  SqrtElement& operator-=(const SqrtElement& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  SqrtElement operator-() const { return SqrtElement(q0_, -a_, -b_); }
  friend SqrtElement operator+(SqrtElement x, const SqrtElement& y) { return x += y; }
  friend SqrtElement operator-(SqrtElement x, const SqrtElement& y) { return x -= y; }
  friend SqrtElement operator*(const SqrtElement& x, const SqrtElement& y) {
    x.check(y);
    mpq_class q(x.q0_);
    return SqrtElement(x.q0_, x.a_ * y.a_ + q * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  SqrtElement& operator*=(const SqrtElement& y) { return *this = *this * y; }
  friend bool operator==(const SqrtElement& x, const SqrtElement& y) {
    return x.q0_ == y.q0_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  SqrtElement inverse() const {
    // (a + b s)^{-1} = (a - b s) / (a^2 - q0 b^2); the norm vanishes only at 0
    // because sqrt(q0) is irrational.
    mpq_class norm = a_ * a_ - mpq_class(q0_) * b_ * b_;
    if (norm == 0) throw NotInvertible("division by zero in Q(sqrt(" + std::to_string(q0_) + "))");
    return SqrtElement(q0_, a_ / norm, -b_ / norm);
  }
  friend SqrtElement operator/(const SqrtElement& x, const SqrtElement& y) { return x * y.inverse(); }

  // "a + b*s" with s = sqrt(q0), e.g. "1/2 + 3*s".
  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    std::ostringstream os;
    auto sqrt_term = [&](const mpq_class& b) {
      if (b == 1) return std::string("s");
      return b.get_str() + "*s";
    };
    if (a_ == 0) {
      if (b_ == -1) return "-s";
      return sqrt_term(b_);
    }
    os << a_.get_str() << (b_ < 0 ? " - " : " + ") << sqrt_term(abs(b_));
    return os.str();
  }

 private:
  void check(const SqrtElement& o) const {
    if (q0_ != o.q0_)
      throw ContextMismatch("mixing Q(sqrt(" + std::to_string(q0_) + ")) with Q(sqrt(" + std::to_string(o.q0_) + "))");
  }

  std::int64_t q0_ = 2;
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const SqrtElement& x) { return os << x.to_string(); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Ring objects ---------------------------------------------------------------

struct LaurentRing {
  using value_type = LaurentPoly;
  static constexpr bool is_formal = true;

  LaurentPoly zero() const { return {}; }
  LaurentPoly one() const { return LaurentPoly(1); }
  LaurentPoly v_power(int k) const { return LaurentPoly::monomial(k); }
  LaurentPoly from_integer(const mpz_class& c) const { return LaurentPoly(c); }
  LaurentPoly times_v_power(const LaurentPoly& x, int k) const { return x.shifted(k); }
  bool is_zero(const LaurentPoly& x) const { return x.is_zero(); }
  LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) const { return LaurentPoly::divide_exact(a, b); }
  std::string name() const { return "formal"; }
  friend bool operator==(const LaurentRing&, const LaurentRing&) { return true; }
};

struct SqrtField {
  using value_type = SqrtElement;
  static constexpr bool is_formal = false;

  explicit SqrtField(std::int64_t prime) : q0(prime) {
    if (!is_prime(q0)) throw InvalidInput("specialization requires a prime q0, got " + std::to_string(q0));
  }

  std::int64_t q0;

  SqrtElement zero() const { return SqrtElement(q0, 0, 0); }
  SqrtElement one() const { return SqrtElement(q0, 1, 0); }
  SqrtElement from_integer(const mpz_class& c) const { return SqrtElement(q0, mpq_class(c), 0); }

  // sqrt(q0)^k, exact.
  SqrtElement v_power(int k) const {
    const int half = (k >= 0) ? k / 2 : -((-k + 1) / 2);  // floor(k / 2)
    mpz_class base;
    mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(q0), static_cast<unsigned long>(half >= 0 ? half : -half));
    mpq_class scale = half >= 0 ? mpq_class(base) : mpq_class(1, 1) / mpq_class(base);
    if (k - 2 * half == 0) return SqrtElement(q0, scale, 0);
    return SqrtElement(q0, 0, scale);
  }
  SqrtElement times_v_power(const SqrtElement& x, int k) const { return k == 0 ? x : x * v_power(k); }
  bool is_zero(const SqrtElement& x) const { return x.is_zero(); }
  SqrtElement divide(const SqrtElement& a, const SqrtElement& b) const { return a / b; }
  std::string name() const { return "sqrt(" + std::to_string(q0) + ")"; }
  friend bool operator==(const SqrtField& a, const SqrtField& b) { return a.q0 == b.q0; }
};

// Specialization v -> sqrt(q0); a ring homomorphism Z[v^{+-1}] -> Q(sqrt(q0)).
inline SqrtElement ev(const LaurentPoly& x, std::int64_t q0) {
  SqrtField field(q0);
  SqrtElement out = field.zero();
  for (const auto& [e, c] : x.terms()) out += field.from_integer(c) * field.v_power(e);
  return out;
}

inline LaurentPoly bar(const LaurentPoly& x) { return x.bar(); }

template <class Ring>
typename Ring::value_type ring_power(const Ring& ring, const typename Ring::value_type& base, int exponent) {
  using S = typename Ring::value_type;
  S b = base;
  if (exponent < 0) {
    if constexpr (Ring::is_formal) {
      b = base.inverse();
    } else {
      b = base.inverse();
    }
    exponent = -exponent;
  }
  S out = ring.one();
  while (exponent > 0) {
    if (exponent & 1) out = out * b;
    b = b * b;
    exponent >>= 1;
  }
  return out;
}

// Balanced quantum binomial [n k]_t with
//   [n k]_t = prod_{j<k} (t^{n-j} - t^{-(n-j)}) / prod_{j=1..k} (t^j - t^{-j}),
// evaluated for n >= 0 through the recurrence
//   [n k] = t^k [n-1 k] + t^{k-n} [n-1 k-1],
// which keeps formal values inside Z[v^{+-1}].
template <class Ring>
typename Ring::value_type qbinom(const Ring& ring, int n, int k, const typename Ring::value_type& base) {
  using S = typename Ring::value_type;
  if (k < 0) throw InvalidInput("quantum binomial needs k >= 0");
  if (n < 0) throw InvalidInput("quantum binomial is only evaluated for n >= 0");
  if (k > n) return ring.zero();
  const S base_inv = base.inverse();
  auto power = [&](int e) {
    S out = ring.one();
    const S& f = e >= 0 ? base : base_inv;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) out = out * f;
    return out;
  };
  // row[j] = [r j]
  std::vector<S> row{ring.one()};
  for (int r = 1; r <= n; ++r) {
    std::vector<S> next(static_cast<std::size_t>(r) + 1, ring.zero());
    for (int j = 0; j <= r; ++j) {
      S value = ring.zero();
      if (j <= r - 1) value += power(j) * row[static_cast<std::size_t>(j)];
      if (j >= 1) value += power(j - r) * row[static_cast<std::size_t>(j) - 1];
      next[static_cast<std::size_t>(j)] = value;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Text parsing -----------------------------------------------------------------

namespace detail {

struct TermToken {
  bool negative = false;
  std::string coefficient;  // empty means 1
  bool has_symbol = false;
  int exponent = 1;
};

inline std::vector<TermToken> tokenize_terms(std::string_view text, char symbol) {
  std::vector<TermToken> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw InvalidInput("cannot parse scalar '" + std::string(text) + "': " + why);
  };
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (i < text.size()) {
    TermToken tok;
    skip();
    if (!first) {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected '+' or '-'");
      tok.negative = text[i] == '-';
      ++i;
      skip();
    } else if (text[i] == '-') {
      tok.negative = true;
      ++i;
      skip();
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    tok.coefficient = std::string(text.substr(start, i - start));
    skip();
    if (!tok.coefficient.empty() && i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i >= text.size() || text[i] != symbol) fail("expected symbol after '*'");
    }
    if (i < text.size() && text[i] == symbol) {
      tok.has_symbol = true;
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        try {
          tok.exponent = std::stoi(std::string(text.substr(es, i - es)));
        } catch (const std::exception&) {
          fail("bad exponent");
        }
      }
    } else if (tok.coefficient.empty()) {
      fail("expected a term");
    }
    out.push_back(tok);
    skip();
  }
  return out;
}

}  // namespace detail

inline LaurentPoly parse_laurent(std::string_view text) {
  LaurentPoly out;
  for (const auto& tok : detail::tokenize_terms(text, 'v')) {
    mpz_class c = 1;
    if (!tok.coefficient.empty()) {
      if (tok.coefficient.find('/') != std::string::npos)
        throw InvalidInput("formal coefficients are integers: '" + std::string(text) + "'");
      c = mpz_class(tok.coefficient);
    }
    if (tok.negative) c = -c;
    out += LaurentPoly::monomial(tok.has_symbol ? tok.exponent : 0, c);
  }
  return out;
}

inline SqrtElement parse_sqrt(std::string_view text, std::int64_t q0) {
  SqrtField field(q0);
  SqrtElement out = field.zero();
  for (const auto& tok : detail::tokenize_terms(text, 's')) {
    mpq_class c = 1;
    if (!tok.coefficient.empty()) {
      c = mpq_class(tok.coefficient);
      c.canonicalize();
    }
    if (tok.negative) c = -c;
    if (!tok.has_symbol) {
      out += SqrtElement(q0, c, 0);
    } else {
      if (tok.exponent != 1) throw InvalidInput("specialized text only uses s^1: '" + std::string(text) + "'");
      out += SqrtElement(q0, 0, c);
    }
  }
  return out;
}

inline std::string to_string(const LaurentPoly& x) { return x.to_string(); }
inline std::string to_string(const SqrtElement& x) { return x.to_string(); }

}  // namespace qca
