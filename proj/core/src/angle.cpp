#include "grasshopper/angle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

const Rational& Angle::pi_multiple() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw InvalidArgument("Angle::pi_multiple: angle is a float");
}

double Angle::radians() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    return r->convert_to<double>() * std::numbers::pi;
  }
  return std::get<double>(value_);
}

Angle Angle::wrapped() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    if (*r >= 0 && *r < 2) return *this;
    const Rational half = *r / 2;
    return Angle(Rational(*r - 2 * Rational(floor(half))));
  }
  double x = std::fmod(std::get<double>(value_), kTwoPi);
  if (x < 0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return Angle(x);
}

std::string Angle::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->str() + "*pi";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

Angle Angle::operator-() const {
  if (is_exact()) return Angle(Rational(-pi_multiple()));
  return Angle(-std::get<double>(value_));
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) return Angle(Rational(a.pi_multiple() + b.pi_multiple()));
  return Angle(a.radians() + b.radians());
}

Angle operator-(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) return Angle(Rational(a.pi_multiple() - b.pi_multiple()));
  return Angle(a.radians() - b.radians());
}

Angle operator*(const Angle& a, const Scalar& k) {
  if (a.is_exact() && k.is_exact()) return Angle(Rational(a.pi_multiple() * k.exact()));
  return Angle(a.radians() * k.to_double());
}

Angle operator/(const Angle& a, const Scalar& k) {
  if (a.is_exact() && k.is_exact()) {
    if (k.exact() == 0) throw InvalidArgument("Angle: division by zero");
    return Angle(Rational(a.pi_multiple() / k.exact()));
  }
  return Angle(a.radians() / k.to_double());
}

Scalar operator/(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.pi_multiple() == 0) throw InvalidArgument("Angle: division by zero angle");
    return Scalar(Rational(a.pi_multiple() / b.pi_multiple()));
  }
  return Scalar::from_double(a.radians() / b.radians());
}

std::partial_ordering operator<=>(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.pi_multiple();
    const auto& y = b.pi_multiple();
    if (x < y) return std::partial_ordering::less;
    if (x > y) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.radians() <=> b.radians();
}

bool operator==(const Angle& a, const Angle& b) { return (a <=> b) == 0; }

bool approx_equal(const Angle& a, const Angle& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.pi_multiple() == b.pi_multiple();
  return std::abs(a.radians() - b.radians()) <= tol;
}

RationalAngle RationalAngle::from_reduced(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw InvalidArgument("RationalAngle: denominator must be positive");
  if (boost::multiprecision::gcd(abs(num), den) != 1) {
    throw InvalidArgument("RationalAngle: " + num.str() + "/" + den.str() +
                          " is not reduced");
  }
  return RationalAngle(Angle::pi_times(Rational(num, den)));
}

BigInt RationalAngle::numerator() const {
  return boost::multiprecision::numerator(value_.pi_multiple());
}

BigInt RationalAngle::denominator() const {
  return boost::multiprecision::denominator(value_.pi_multiple());
}

}  // namespace grasshopper
