#include "grasshopper/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "grasshopper/errors.hpp"
#include "grasshopper/scalar.hpp"

namespace grasshopper {

namespace {

void check_input(double x, long long max_q, long long min_q, const char* where) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw InvalidArgument(std::string(where) + ": x must be positive and finite");
  }
  if (max_q < min_q || max_q > kMaxApproxDenominator) {
    throw InvalidArgument(std::string(where) + ": max_q must lie in [" + std::to_string(min_q) +
                          ", " + std::to_string(kMaxApproxDenominator) + "]");
  }
}

// Partial quotients of the exact binary value of x.
std::vector<long long> partial_quotients(double x, long long max_q) {
  const Rational exact(x);
  BigInt num = boost::multiprecision::numerator(exact);
  BigInt den = boost::multiprecision::denominator(exact);
  std::vector<long long> quotients;
  long long q_prev = 0, q_cur = 1;
  while (den != 0 && quotients.size() < 200) {
    const BigInt a = num / den;
    const BigInt r = num - a * den;
    const long long ai = a > BigInt(kMaxApproxDenominator) ? kMaxApproxDenominator + 1
                                                           : a.convert_to<long long>();
    quotients.push_back(ai);
    if (quotients.size() > 1) {
      const long long q_next = ai > max_q ? max_q + 1 : ai * q_cur + q_prev;
      if (q_next > max_q) break;
      q_prev = q_cur;
      q_cur = q_next;
    }
    num = den;
    den = r;
  }
  return quotients;
}

Approximation make(double x, long long p, long long q) {
  return {p, q, approximation_error(x, p, q)};
}

bool qualifies(const Approximation& a) {
  if (!a.p_even() || !a.q_odd()) return false;
  const double q = static_cast<double>(a.q);
  return a.error <= 1.0 / (q * q);
}

bool better(const Approximation& a, const Approximation& b) {
  if (a.error != b.error) return a.error < b.error;
  return a.q < b.q;
}

}  // namespace

double approximation_error(double x, long long p, long long q) {
  const Rational diff = Rational(x) - Rational(p, q);
  return abs(diff).convert_to<double>();
}

std::vector<Approximation> convergents(double x, long long max_q) {
  check_input(x, max_q, 1, "convergents");
  const auto a = partial_quotients(x, max_q);
  std::vector<Approximation> out;
  long long p_prev = 1, q_prev = 0;
  long long p_cur = a.front(), q_cur = 1;
  out.push_back(make(x, p_cur, q_cur));
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (a[k] > max_q) break;
    const long long q_next = a[k] * q_cur + q_prev;
    if (q_next > max_q) break;
    const long long p_next = a[k] * p_cur + p_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    out.push_back(make(x, p_cur, q_cur));
  }
  return out;
}

std::vector<Approximation> semiconvergents(double x, long long max_q) {
  check_input(x, max_q, 1, "semiconvergents");
  const auto a = partial_quotients(x, max_q);
  std::vector<Approximation> out;
  long long p_prev = 1, q_prev = 0;
  long long p_cur = a.front(), q_cur = 1;
  out.push_back(make(x, p_cur, q_cur));
  for (std::size_t k = 1; k < a.size(); ++k) {
    // (p_prev + j p_cur) / (q_prev + j q_cur), j = 1..a_k.
    long long last_j = 0;
    for (long long j = 1; j <= a[k]; ++j) {
      const long long q = q_prev + j * q_cur;
      if (q > max_q) break;
      out.push_back(make(x, p_prev + j * p_cur, q));
      last_j = j;
    }
    if (last_j != a[k]) break;
    const long long p_next = a[k] * p_cur + p_prev;
    const long long q_next = a[k] * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.q < r.q; });
  return out;
}

Approximation approx_even_odd(double x, long long max_q) {
  check_input(x, max_q, 3, "approx_even_odd");
  if (x * static_cast<double>(max_q) > 0x1p52) {
    throw InvalidArgument("approx_even_odd: x * max_q too large for exact numerators");
  }
  std::vector<Approximation> candidates;
  for (const auto& c : semiconvergents(x, max_q)) {
    if (std::gcd(c.p, c.q) == 1 && qualifies(c)) candidates.push_back(c);
  }

  // Exhaustive scan over odd q in double precision; near-ties are re-ranked
  // exactly below.
  struct Hit {
    long long p, q;
    double err;
  };
  std::vector<Hit> hits;
  double best = std::numeric_limits<double>::infinity();
  for (long long q = 1; q <= max_q; q += 2) {
    const double qd = static_cast<double>(q);
    const auto mid = static_cast<long long>(std::llround(x * qd / 2.0)) * 2;
    for (long long p : {mid - 2, mid, mid + 2}) {
      const double err = std::abs(x - static_cast<double>(p) / qd);
      if (err > 1.0 / (qd * qd) * (1.0 + 1e-9) || err > best * (1.0 + 1e-6) + 1e-300) continue;
      if (std::gcd(p, q) != 1) continue;
      best = std::min(best, err);
      hits.push_back({p, q, err});
    }
  }
  for (const auto& h : hits) {
    if (h.err > best * (1.0 + 1e-6) + 1e-300) continue;
    const Approximation c = make(x, h.p, h.q);
    if (qualifies(c)) candidates.push_back(c);
  }

  if (candidates.empty()) {
    throw NotFound("approx_even_odd: no even/odd approximation with q <= " + std::to_string(max_q));
  }
  return *std::min_element(candidates.begin(), candidates.end(), better);
}

}  // namespace grasshopper
