#pragma once

#include <stdexcept>
#include <string>

namespace charvanish {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition and input errors.
struct DegreeMismatch : Error { using Error::Error; };
struct MalformedPermutation : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotAbelian : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct InstanceTooLarge : Error { using Error::Error; };

// A multiset handed to decompose() whose cyclotomic sum is not zero.
// Carries the canonical rendering of the nonzero sum.
struct NotVanishing : Error {
  explicit NotVanishing(std::string sum_rendering)
      : Error("multiset sum is not zero: " + sum_rendering),
        sum(std::move(sum_rendering)) {}
  std::string sum;
};

// A required block member was absent during decomposition.  The lemma
// guarantees this cannot happen; seeing it means the implementation is wrong.
struct DecompositionFailure : Error { using Error::Error; };

// Unreachable internal states (e.g. Dixon lifting failure).
struct InternalError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  int line;
  int column;
};

}  // namespace charvanish
