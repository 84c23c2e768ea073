#pragma once

#include <compare>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace grasshopper {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Comparison tolerance used whenever a float value takes part.
inline constexpr double kFloatTolerance = 1e-12;

/// A real number held either exactly (rational) or as a double.
///
/// Arithmetic between two exact operands stays exact. As soon as a double is
/// involved the result is a double; exactness claims only hold on the pure
/// rational path.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long long v) : value_(Rational(v)) {}  // NOLINT: implicit on purpose
  Scalar(int v) : value_(Rational(v)) {}        // NOLINT
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT

  static Scalar from_double(double v) { return Scalar(Tag{}, v); }
  static Scalar ratio(long long num, long long den);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// Throws InvalidArgument on a float value.
  const Rational& exact() const;
  double to_double() const;

  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  /// Exact comparison when both are exact, plain double comparison otherwise.
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Tag {};
  Scalar(Tag, double v) : value_(v) {}

  std::variant<Rational, double> value_;
};

/// Equal on the exact path, within `tol` otherwise.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kFloatTolerance);

/// Integer floor of a rational.
BigInt floor(const Rational& r);

}  // namespace grasshopper
