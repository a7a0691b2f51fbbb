#pragma once

#include <stdexcept>
#include <string>

namespace siltsms {

/// Unknown Dynkin label, or a rank outside the family's range.
class ClassificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A product that must be integral was not. Signals a wrong root datum.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Catalog or complex construction failed an internal consistency check.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computed object contradicts a theorem that must hold for Dynkin type.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested computation is not available for this input (e.g. valued types).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive search hit its configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace siltsms
