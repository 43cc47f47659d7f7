#ifndef LATDIFF_ERRORS_HPP_
#define LATDIFF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace latdiff {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad sizes, out-of-range indices, parse failures.
struct InvalidInput : Error {
  using Error::Error;
};

// A poset that fails to be a (bounded) lattice. The message names the
// offending pair or axiom.
struct NotALattice : InvalidInput {
  using InvalidInput::InvalidInput;
};

// An operation applied to a lattice of the wrong shape, e.g. a chain-only
// construction applied to a non-chain.
struct UnsupportedShape : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A request whose search space exceeds the configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace latdiff

#endif  // LATDIFF_ERRORS_HPP_
