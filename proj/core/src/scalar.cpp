#include "grasshopper/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "grasshopper/errors.hpp"

namespace grasshopper {

Scalar Scalar::ratio(long long num, long long den) {
  if (den == 0) throw InvalidArgument("Scalar::ratio: zero denominator");
  return Scalar(Rational(num, den));
}

const Rational& Scalar::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw InvalidArgument("Scalar::exact: value is a float");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->convert_to<double>();
  return std::get<double>(value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-exact()));
  return from_double(-std::get<double>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() + b.exact()));
  return Scalar::from_double(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() - b.exact()));
  return Scalar::from_double(a.to_double() - b.to_double());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() * b.exact()));
  return Scalar::from_double(a.to_double() * b.to_double());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.exact() == 0) throw InvalidArgument("Scalar: division by zero");
    return Scalar(Rational(a.exact() / b.exact()));
  }
  return Scalar::from_double(a.to_double() / b.to_double());
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.exact() < b.exact()) return std::partial_ordering::less;
    if (a.exact() > b.exact()) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

bool operator==(const Scalar& a, const Scalar& b) { return (a <=> b) == 0; }

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return std::abs(a.to_double() - b.to_double()) <= tol;
}

BigInt floor(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace grasshopper
