#pragma once

#include <stdexcept>
#include <string>

namespace whmf {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reading a coefficient at or beyond the known precision of a series.
struct PrecisionExceeded : Error {
  using Error::Error;
};

/// Inverting a series whose leading coefficient is not +1 or -1.
struct NonUnitLeadingCoefficient : Error {
  using Error::Error;
};

/// Requesting a canonical basis element f_{k,m} with m below -ell.
struct IndexBelowRange : Error {
  using Error::Error;
};

/// Weight outside the set handled by the requested construction.
struct UnsupportedWeight : Error {
  using Error::Error;
};

/// A defining numerator failed to be divisible by its integer denominator.
struct ExactDivisionFailure : Error {
  using Error::Error;
};

/// Triangular decomposition left a nonzero residual within known precision.
struct NotInSpan : Error {
  using Error::Error;
};

/// dissect() met a monomial with an odd exponent of Q.
struct OddQExponent : Error {
  using Error::Error;
};

/// halve() met a monomial with an odd exponent of q.
struct OddExponentOfQ : Error {
  using Error::Error;
};

/// The a = b >= 1 cell of the main theorem carries no claim.
struct NoClaim : Error {
  using Error::Error;
};

/// verify_lemma() was asked for a name missing from the registry.
struct UnknownLemma : Error {
  using Error::Error;
};

/// Expression text failed to parse.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace whmf
