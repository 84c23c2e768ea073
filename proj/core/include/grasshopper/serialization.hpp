#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grasshopper/angle.hpp"
#include "grasshopper/arc_set.hpp"
#include "grasshopper/scalar.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper {

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// {"arcs": [...]} with each arc either
///   {"kind":"rational","start":{"num":N,"den":D},"end":{...}}  (units of pi)
/// or {"kind":"float","start_f":x,"end_f":y}                     (radians).
/// Integers beyond 64 bits are written as decimal strings.
std::string arc_set_to_json(const ArcSet& set, int indent = 2);
/// Inverse of arc_set_to_json; bit-exact on both kinds. Throws
/// InvalidArgument on malformed input.
ArcSet arc_set_from_json(const std::string& text);

/// {"case", "phi", "r", "p", "q", "n", "caps":[{"theta","r","s"}], "cups",
///  "adjacency":[[from, to], ...]}.
std::string cogged_lawn_to_json(const CoggedLawn& lawn, int indent = 2);
/// Rebuilds and revalidates the lawn.
CoggedLawn cogged_lawn_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);
/// "n/d" (or "n") for exact values, format_double otherwise.
std::string format_scalar(const Scalar& x);

struct CircleRow {
  RationalAngle jump;
  std::string construction;
  Scalar retention;
  Scalar bound;
  bool attained = false;
};

inline constexpr const char* kCircleCsvVersion = "# grasshopper circle-retention v1";
std::string circle_csv_header();
/// jump_num, jump_den_or_float, construction, retention_num, retention_den,
/// bound, attained_flag. A float jump leaves jump_num empty; a float retention
/// leaves retention_den empty.
std::string circle_csv_row(const CircleRow& row);

struct SphereRow {
  LawnCase lawn_case = LawnCase::hemisphere;
  long long p = 0;
  long long q_or_n = 0;
  double phi = 0.0;
  double r = 0.0;
  double aa_total = 0.0;
  double an_minus_as_total = 0.0;
  double ll_minus_ss = 0.0;
  double std_error = 0.0;
  std::optional<double> mc_retention;
  std::optional<double> mc_std_error;
  std::uint64_t seed = 0;
};

inline constexpr const char* kSphereCsvVersion = "# grasshopper sphere-retention v1";
std::string sphere_csv_header();
std::string sphere_csv_row(const SphereRow& row);

}  // namespace grasshopper
