#pragma once

#include <stdexcept>

namespace subbundles {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation argument violates its precondition (genus below 1, negative
/// exponent, state/matrix dimension mismatch, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// A problem instance violates the basic rank/genus constraints
/// r >= 2, 1 <= r' < r, g >= 1.
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

/// The finiteness condition r'd - rd' = r'(r - r')(g - 1) has no integer
/// solution d' for the given instance. Such instances are ill-posed for
/// counting and are rejected rather than reported as zero.
class NoValidDPrimeError : public InvalidInstanceError {
 public:
  using InvalidInstanceError::InvalidInstanceError;
};

/// The rank pair (r, r') is outside the supported cases: line subbundles
/// (r' = 1) of any rank-r bundle, or rank-2 subbundles of a rank-4 bundle.
class UnsupportedRankPairError : public Error {
 public:
  using Error::Error;
};

}  // namespace subbundles
