/**
 * Arbitrary-precision number types and error types shared across the library.
 *
 * Every quantity in torivan is exact: lattice coordinates, divisor
 * coefficients and determinants are arbitrary-precision integers, and all
 * intermediate linear algebra runs over arbitrary-precision rationals.
 * There is no floating point anywhere in the computation path.
 */

#ifndef TORIVAN_NUMERIC_HPP
#define TORIVAN_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace torivan {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Inputs whose lattice dimensions do not match. */
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/** A fan that violates a precondition (not complete, not smooth, bad cone...). */
class FanError : public std::runtime_error {
 public:
  explicit FanError(const std::string& what) : std::runtime_error(what) {}
};

/** A linear system that is singular where the caller required regularity. */
class SingularSystem : public std::runtime_error {
 public:
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

/** Character enumeration exceeded the configured cap. */
class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace torivan

#endif  // TORIVAN_NUMERIC_HPP
