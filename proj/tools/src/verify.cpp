#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "commands.hpp"
#include "grasshopper/br_table.hpp"
#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/density_lawn.hpp"
#include "grasshopper/diophantine.hpp"
#include "grasshopper/oracle.hpp"
#include "grasshopper/serialization.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kVerifyCsvVersion = "# grasshopper verify v1";

class Report {
 public:
  void exact(const std::string& check, const Scalar& expected, const Scalar& actual) {
    rows_.push_back({check, format_scalar(expected), format_scalar(actual), "exact", expected == actual});
  }
  void near(const std::string& check, double expected, double actual, double tol) {
    rows_.push_back({check, format_double(expected), format_double(actual), format_double(tol),
                     std::abs(expected - actual) <= tol});
  }
  void at_most(const std::string& check, double bound, double actual) {
    rows_.push_back({check, "<=" + format_double(bound), format_double(actual), "bound", actual <= bound});
  }
  void at_least(const std::string& check, double bound, double actual) {
    rows_.push_back({check, ">=" + format_double(bound), format_double(actual), "bound", actual >= bound});
  }
  void holds(const std::string& check, const std::string& actual, bool ok) {
    rows_.push_back({check, "true", actual, "exact", ok});
  }

  bool all_pass() const {
    for (const auto& r : rows_) {
      if (!r.pass) return false;
    }
    return true;
  }

  std::string csv() const {
    std::ostringstream os;
    os << kVerifyCsvVersion << "\ncheck,expected,actual,tolerance,pass\n";
    for (const auto& r : rows_) {
      os << r.check << ',' << r.expected << ',' << r.actual << ',' << r.tolerance << ',' << (r.pass ? 1 : 0)
         << '\n';
    }
    return os.str();
  }

 private:
  struct Row {
    std::string check, expected, actual, tolerance;
    bool pass;
  };
  std::vector<Row> rows_;
};

Angle pi(long long num, long long den = 1) { return Angle::pi_times(Rational(num, den)); }

std::string frac(long long p, long long q) { return std::to_string(p) + "/" + std::to_string(q); }

void circle_exact(Report& rep) {
  rep.exact("general pi/3 q=5 at 4pi/5", 1, retention(construct_general(pi(1, 3), 2, 5), pi(4, 5)));
  rep.exact("general pi q=1 at 2pi", 1, retention(construct_general(pi(1), 1, 1), pi(2)));
  rep.near("general L=1 q=7 at 6pi/7", 1.0,
           retention(construct_general(Angle::from_radians(1.0), 3, 7), pi(6, 7)).to_double(), 1e-12);
  for (long long q : {5, 7}) {
    const long long p = q == 5 ? 2 : 4;
    rep.exact("antipodal even at " + frac(p, q) + " pi", 1, retention(construct_antipodal_even(q), pi(p, q)));
  }
  const long long odd[][2] = {{1, 8}, {3, 8}, {5, 8}, {1, 2}, {3, 7}};
  for (const auto& pq : odd) {
    const auto lawns = construct_antipodal_odd(pq[0], pq[1]);
    const Scalar want = Scalar(1) - Scalar::ratio(1, pq[1]);
    rep.exact("orbit lawn at " + frac(pq[0], pq[1]) + " pi", want, retention(lawns.orbit_lawn, pi(pq[0], pq[1])));
    rep.exact("demi-lawns at " + frac(pq[0], pq[1]) + " pi", want, retention(lawns.demi_lawns, pi(pq[0], pq[1])));
  }
  rep.exact("uniform 1/2 density at pi", Scalar::ratio(1, 2),
            retention(StepDensityLawn::uniform(Scalar::ratio(1, 2)), pi(1)));
  const ArcSet s3 = construct_antipodal_even(3);
  rep.exact("pair: S_3 to complement at pi/3", 1, retention_two(s3, complement(s3), pi(1, 3)));
  const ArcSet semi = ArcSet::normalize({{pi(0), pi(1)}});
  for (long long q : {2, 4, 6}) {
    rep.exact("pair: semicircles at pi/" + std::to_string(q), Scalar(1) - Scalar::ratio(1, q),
              retention_two(semi, semi, pi(1, q)));
  }
}

void circle_orbit(const RunConfig& c, Report& rep) {
  const long long max_q = c.max_q > 0 ? c.max_q : 8;
  if (max_q > 20) throw UsageError("verify circle-orbit: --max-q must be at most 20");
  for (long long q = 2; q <= max_q; ++q) {
    for (long long p = 1; p < 2 * q; p += 2) {
      if (gcd_ll(p, q) != 1) continue;
      rep.exact("orbit maximum at " + frac(p, q) + " pi", orbit_bound(p, q), exhaustive_orbit_max(p, q).max_retention);
    }
  }
}

void diophantine(const RunConfig& c, Report& rep) {
  const double x = named_real(c.x);
  const long long max_q = c.max_q > 0 ? c.max_q : 200;
  const Approximation a = approx_even_odd(x, max_q);
  const double qd = static_cast<double>(a.q);
  rep.holds("p even, q odd", frac(a.p, a.q), a.p_even() && a.q_odd() && gcd_ll(a.p, a.q) == 1);
  rep.at_most("q <= max-q", static_cast<double>(max_q), qd);
  rep.at_most("|x - p/q| * q^2", 1.0, a.error * qd * qd);
  const double leave = 1.0 - retention(construct_antipodal_even(a.q), Angle::from_radians(kPi * x)).to_double();
  rep.near("leaving probability = q |x - p/q|", qd * a.error, leave, 1e-9);
  rep.at_most("leaving probability <= 1/q", 1.0 / qd + 1e-9, leave);
}

void sphere_asymptotics(const RunConfig& c, Report& rep) {
  std::vector<double> phis{kPi / 3, 1.2, 6 * kPi / 13};
  if (c.phi_rad) phis = {*c.phi_rad};
  QuadratureOptions opts;
  opts.rel_tol = c.rel_tol;
  for (double phi : phis) {
    double prev = std::numeric_limits<double>::infinity();
    for (double r : {4e-3, 2e-3, 1e-3}) {
      const double aa = br_pair(phi, r, 1.0, 1.0, opts).value;
      const double ns = br_north_minus_south(phi, r, 1.0, opts).value;
      const double defect = std::abs(ns / (2 * aa) - std::cos(phi));
      const std::string tag = "phi=" + format_double(phi) + " r=" + format_double(r);
      rep.at_most("cos defect decreasing " + tag, prev, defect);
      rep.at_most("cos defect " + tag, 0.1, defect);
      rep.near("pair integral / (4/3 r^3 csc phi) " + tag, 1.0, aa / (4.0 / 3.0 * r * r * r / std::sin(phi)), 0.05);
      prev = defect;
    }
  }
}

CoggedLawn lawn_for_case(const RunConfig& c) {
  if (c.phi_case == "peven") return construct_peven(require_p(c), require_q(c), c.r);
  if (c.phi_case == "podd") return construct_podd(require_p(c), require_q(c), c.r);
  if (c.phi_case == "irrational") {
    if (!c.phi_rad) throw UsageError("verify sphere-improvement: --phi-rad is required for irrational");
    return construct_irrational(*c.phi_rad, c.r, c.n);
  }
  throw UsageError("verify sphere-improvement: --phi-case must be peven, podd or irrational");
}

void sphere_improvement(const RunConfig& c, Report& rep) {
  const CoggedLawn lawn = lawn_for_case(c);
  QuadratureOptions opts;
  opts.rel_tol = c.rel_tol;
  const auto cert = ll_minus_ss(lawn, opts);
  rep.at_least("ll_minus_ss > 0", 0.0, cert.value.value);
  rep.at_least("ll_minus_ss > 3 x quadrature error", 3.0 * cert.value.error, cert.value.value);
}

}  // namespace

int cmd_verify(const RunConfig& c) {
  Report rep;
  if (c.target == "circle-exact") {
    circle_exact(rep);
  } else if (c.target == "circle-orbit") {
    circle_orbit(c, rep);
  } else if (c.target == "diophantine") {
    diophantine(c, rep);
  } else if (c.target == "sphere-asymptotics") {
    sphere_asymptotics(c, rep);
  } else if (c.target == "sphere-improvement") {
    sphere_improvement(c, rep);
  } else {
    throw UsageError("verify: unknown suite '" + c.target + "'");
  }
  emit(c, rep.csv());
  return rep.all_pass() ? kSuccess : kVerifyFailed;
}

}  // namespace grasshopper::cli
