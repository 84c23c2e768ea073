#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grasshopper/angle.hpp"

namespace grasshopper::cli {

enum ExitCode : int { kSuccess = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

/// Thrown for bad or missing flags; reported with exit code kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;

  std::optional<long long> p;
  std::optional<long long> q;
  std::optional<double> phi_rad;

  std::optional<std::string> length_pi;
  std::optional<double> length_rad;
  double eps = 1e-3;
  double r = 1e-3;
  long long n = 0;

  std::string phi_case;
  std::string x = "sqrt2";
  long long max_q = 0;
  std::uint64_t float_grid = 0;

  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double rel_tol = 1e-4;

  std::string lawn_path;
  std::string out;
};

/// Jump from --p/--q (units of pi, must be reduced) or --phi-rad.
RationalAngle jump_from(const RunConfig& c);
/// Lawn length from --length-pi "n/d" or --length-rad.
Angle length_from(const RunConfig& c);
/// sqrt2, golden, e, pi or a decimal number.
double named_real(const std::string& name);

long long require_p(const RunConfig& c);
long long require_q(const RunConfig& c);

/// Writes to --out (relative paths resolved against GRASSHOPPER_OUT_DIR when
/// set) or to stdout when --out is empty or "-".
void emit(const RunConfig& c, const std::string& text);

}  // namespace grasshopper::cli
