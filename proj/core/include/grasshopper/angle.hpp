#pragma once

#include <compare>
#include <string>
#include <variant>

#include "grasshopper/scalar.hpp"

namespace grasshopper {

/// A real-valued angle or arc length.
///
/// Exact angles are stored as a rational multiple of pi; float angles store
/// radians. Values are not wrapped: lengths up to 2*pi and unwrapped arc ends
/// are legitimate. Use RationalAngle for a point on the circle.
class Angle {
 public:
  Angle() : value_(Rational(0)) {}

  /// `multiple` * pi, exact.
  static Angle pi_times(Rational multiple) { return Angle(std::move(multiple)); }
  static Angle from_radians(double radians) { return Angle(radians); }
  static Angle full_turn() { return Angle(Rational(2)); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// The rational r with angle = r*pi. Throws InvalidArgument on a float angle.
  const Rational& pi_multiple() const;
  double radians() const;

  /// Representative in [0, 2*pi).
  Angle wrapped() const;

  std::string to_string() const;

  Angle operator-() const;
  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);
  friend Angle operator*(const Angle& a, const Scalar& k);
  friend Angle operator*(const Scalar& k, const Angle& a) { return a * k; }
  friend Angle operator/(const Angle& a, const Scalar& k);
  /// Ratio of two angles; exact when both are.
  friend Scalar operator/(const Angle& a, const Angle& b);
  Angle& operator+=(const Angle& o) { return *this = *this + o; }

  friend std::partial_ordering operator<=>(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b);

 private:
  explicit Angle(Rational r) : value_(std::move(r)) {}
  explicit Angle(double rad) : value_(rad) {}

  std::variant<Rational, double> value_;
};

bool approx_equal(const Angle& a, const Angle& b, double tol = kFloatTolerance);

/// A point on the circle of circumference 2*pi, canonically in [0, 2*pi).
///
/// The exact kind keeps the reduced fraction num/den with angle = (num/den)*pi
/// and num/den in [0, 2).
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(const Angle& a) : value_(a.wrapped()) {}

  /// (num/den)*pi. The fraction must already be reduced and den > 0; parity of
  /// the numerator carries meaning, so nothing is silently reduced here.
  static RationalAngle from_reduced(const BigInt& num, const BigInt& den);
  static RationalAngle from_radians(double radians) {
    return RationalAngle(Angle::from_radians(radians));
  }

  const Angle& value() const { return value_; }
  operator const Angle&() const { return value_; }  // NOLINT

  bool is_exact() const { return value_.is_exact(); }
  BigInt numerator() const;
  BigInt denominator() const;
  double radians() const { return value_.radians(); }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  Angle value_;
};

}  // namespace grasshopper
