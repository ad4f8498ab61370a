#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed inputs: bad dimensions, invalid densities, out-of-range indices.
class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

/// A custom-grid preference was queried at a point that is not on its lattice.
class OffGridError : public InvalidArgumentError {
public:
  using InvalidArgumentError::InvalidArgumentError;
};

/// A mathematical hypothesis of the method is violated: a cover check fails,
/// a column sum exceeds its bound, a demand matrix is identically zero.
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// The numerics did not reach the requested tolerance: residual above target,
/// a pinned entry below the positivity threshold, inflated preference sets
/// touching a forbidden facet, or a certificate that does not check out.
class ToleranceError : public Error {
public:
  using Error::Error;
};

/// An exhaustive oracle exceeded its time budget; the message carries the
/// progress made so far.
class BudgetError : public Error {
public:
  using Error::Error;
};

} // namespace fairdiv
