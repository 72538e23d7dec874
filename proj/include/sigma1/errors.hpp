/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by the whole library.
 *
 * Every failure mode that a caller can provoke with bad data has its own
 * exception type, so tests can assert the precise condition.  All of them
 * derive from sigma1::Error (itself a std::runtime_error).
 */
#ifndef SIGMA1_ERRORS_HPP
#define SIGMA1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigma1 {

/// Common base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid global parameters (p not prime, nonpositive f/e/d, absurd sizes).
struct BadParams : Error {
  using Error::Error;
};

/// Requested quotient O_K/pi^n with 1 < e < n: the truncation is not one of
/// the supported models (Z/p^n, Galois ring, F_q[pi]/pi^n).
struct UnsupportedRing : Error {
  using Error::Error;
};

/// Vector has no unit coordinate, so it spans no projective class.
struct NotUnimodular : Error {
  using Error::Error;
};

/// Matrix determinant is not a unit of the coefficient ring.
struct SingularMatrix : Error {
  using Error::Error;
};

/// Two objects that must live over the same truncation level do not.
struct LevelMismatch : Error {
  using Error::Error;
};

/// Two exponent vectors with different coefficient moduli were combined.
struct ModulusMismatch : Error {
  using Error::Error;
};

/// Simplex type vector does not partition d+1 into positive blocks.
struct InvalidType : Error {
  using Error::Error;
};

/// Operation requires the maximal simplex (type (1,...,1)).
struct NotMaximal : Error {
  using Error::Error;
};

/// Valuation (or similar) of the zero element requested.
struct ZeroElement : Error {
  using Error::Error;
};

/// Inverse of a non-invertible element requested.
struct NonUnit : Error {
  using Error::Error;
};

/// A candidate component function has an empty (zero) component, so it is not
/// an invertible function and cannot be put in canonical form.
struct NotAUnit : Error {
  using Error::Error;
};

}  // namespace sigma1

#endif  // SIGMA1_ERRORS_HPP
