#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qca {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed dimensions, bad indices, cyclic quivers, unparsable text.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Operands live in different algebras (rank, Lambda identity, field, quiver).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// No quotient exists inside the torus (or the coefficient ring).
class NotExact : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. mutated variables do not
// quasi-commute per the mutated Lambda).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Cap on brute-force enumerations. QCA_BUDGET overrides the default.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("QCA_BUDGET")) {
    try {
      auto value = std::stoull(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudget;
}

}  // namespace qca
