#pragma once

#include <stdexcept>
#include <string>

namespace ssp {

// Base of every error raised by the library. Dimension/shape mistakes in
// arguments are reported with std::invalid_argument instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// alpha is a square mod p, so p is not inert in Q(sqrt(alpha)).
struct NotInertError : Error {
  using Error::Error;
};

// A p-adic valuation needed by a computation is censored by the truncation
// level of the Witt ring.
struct InsufficientPrecision : Error {
  using Error::Error;
};

// An exhaustive enumeration would examine more candidates than allowed.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Parameters violate a documented invariant. what() names the invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Two routes to the same closed-form quantity disagree.
struct FormulaInconsistency : Error {
  using Error::Error;
};

struct PairingError : Error {
  using Error::Error;
};

}  // namespace ssp
