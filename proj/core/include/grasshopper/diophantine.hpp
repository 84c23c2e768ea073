#pragma once

#include <vector>

namespace grasshopper {

/// Largest denominator the approximation routines accept.
inline constexpr long long kMaxApproxDenominator = 10'000'000;

/// A reduced fraction p/q approximating some real x.
struct Approximation {
  long long p = 0;
  long long q = 1;
  /// |x - p/q|, evaluated exactly from the double x and rounded once.
  double error = 0.0;

  bool p_even() const { return p % 2 == 0; }
  bool q_odd() const { return q % 2 != 0; }
  friend bool operator==(const Approximation&, const Approximation&) = default;
};

/// |x - p/q| computed exactly on the binary value of x, rounded once.
double approximation_error(double x, long long p, long long q);

/// Continued-fraction convergents of x with q <= max_q, in order. Computed
/// from the exact binary value of x, so a dyadic x yields a finite list whose
/// last entry equals x. Requires x > 0 finite and 1 <= max_q <= 1e7.
std::vector<Approximation> convergents(double x, long long max_q);

/// Convergents plus the intermediate fractions between them, q <= max_q,
/// ordered by q.
std::vector<Approximation> semiconvergents(double x, long long max_q);

/// A reduced p/q with p even, q odd, q <= max_q and |x - p/q| <= 1/q^2,
/// minimising |x - p/q| (ties to the smaller q). Candidates are the
/// qualifying semiconvergents plus an exhaustive scan over odd q <= max_q.
/// Throws NotFound if nothing qualifies. Requires x > 0 finite,
/// 3 <= max_q <= 1e7 and x * max_q < 2^52.
Approximation approx_even_odd(double x, long long max_q);

}  // namespace grasshopper
