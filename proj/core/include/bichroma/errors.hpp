#pragma once

#include <stdexcept>
#include <string>

namespace bichroma {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad coordinates, bad edges, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed input for which the requested structure cannot exist
/// (unbalanced colors, a single color, too few points).
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle would exceed its enumeration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction broke one of its own invariants. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bichroma
