#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "subbundles/errors.hpp"

namespace subbundles {

/// Arbitrary-precision integer scalar used for all counts (they grow like
/// 8^g, so no fixed-width type survives past small genus).
///
/// This is a thin value type over boost::multiprecision::cpp_int. The
/// conversions are deliberately one-sided: construction from built-in
/// integers is implicit, everything else is explicit. Eigen's operator
/// overload resolution probes `is_convertible<Expr, Scalar>` for arbitrary
/// expression types, and those probes must resolve to "no" without
/// instantiating cpp_int's converting constructors (which hard-error on
/// Eigen expression types under Boost 1.74).
class Count {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Count() = default;
  Count(int v) : value_(v) {}
  Count(long v) : value_(v) {}
  Count(long long v) : value_(v) {}
  Count(unsigned v) : value_(v) {}
  Count(unsigned long v) : value_(v) {}
  Count(unsigned long long v) : value_(v) {}
  explicit Count(Rep v) : value_(std::move(v)) {}

  /// Parses a (possibly signed) decimal string.
  static Count from_decimal(const std::string& text) {
    try {
      return Count(Rep(text));
    } catch (const std::exception&) {
      throw Error("not a decimal integer: '" + text + "'");
    }
  }

  const Rep& value() const { return value_; }

  /// Decimal rendering; never has leading zeros or a '+' sign.
  std::string str() const { return value_.str(); }

  /// Checked narrowing, for counts that must fit a machine integer.
  std::int64_t to_int64() const {
    if (value_ > (std::numeric_limits<std::int64_t>::max)() ||
        value_ < (std::numeric_limits<std::int64_t>::min)()) {
      throw Error("count " + str() + " does not fit in 64 bits");
    }
    return value_.convert_to<std::int64_t>();
  }

  bool is_negative() const { return value_.sign() < 0; }

  Count operator-() const { return Count(-value_); }
  Count& operator+=(const Count& o) { value_ += o.value_; return *this; }
  Count& operator-=(const Count& o) { value_ -= o.value_; return *this; }
  Count& operator*=(const Count& o) { value_ *= o.value_; return *this; }
  Count& operator/=(const Count& o) { value_ /= o.value_; return *this; }

  friend Count operator+(const Count& a, const Count& b) { return Count(a.value_ + b.value_); }
  friend Count operator-(const Count& a, const Count& b) { return Count(a.value_ - b.value_); }
  friend Count operator*(const Count& a, const Count& b) { return Count(a.value_ * b.value_); }
  friend Count operator/(const Count& a, const Count& b) { return Count(a.value_ / b.value_); }
  friend Count operator%(const Count& a, const Count& b) { return Count(a.value_ % b.value_); }

  friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value_; }

 private:
  Rep value_{};
};

/// base^exponent, exact. The exponent must be nonnegative.
inline Count pow(const Count& base, std::int64_t exponent) {
  if (exponent < 0) {
    throw InvalidArgumentError("pow: exponent must be >= 0, got " + std::to_string(exponent));
  }
  return Count(boost::multiprecision::pow(base.value(), static_cast<unsigned>(exponent)));
}

/// Division that is required to be exact; a nonzero remainder means an
/// internal identity has been violated, so it throws instead of rounding.
inline Count exact_div(const Count& numerator, const Count& denominator) {
  if (denominator == Count(0)) throw InvalidArgumentError("exact_div: division by zero");
  Count::Rep quotient;
  Count::Rep remainder;
  boost::multiprecision::divide_qr(numerator.value(), denominator.value(), quotient, remainder);
  if (remainder != 0) {
    throw Error("exact_div: " + numerator.str() + " is not divisible by " + denominator.str());
  }
  return Count(std::move(quotient));
}

inline Count gcd(const Count& a, const Count& b) {
  return Count(boost::multiprecision::gcd(a.value(), b.value()));
}

}  // namespace subbundles

namespace Eigen {

template <>
struct NumTraits<subbundles::Count> : GenericNumTraits<subbundles::Count> {
  typedef subbundles::Count Real;
  typedef subbundles::Count NonInteger;
  typedef subbundles::Count Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 200,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace subbundles {

/// Dense linear-algebra aliases; all exact matrix work in this library runs
/// through Eigen with an integer scalar.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CountMatrix = DenseMatrix<Count>;
using CountVector = DenseVector<Count>;

}  // namespace subbundles
