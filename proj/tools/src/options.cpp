#include "options.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

namespace grasshopper::cli {

long long require_p(const RunConfig& c) {
  if (!c.p) throw UsageError(c.command + ": --p is required");
  return *c.p;
}

long long require_q(const RunConfig& c) {
  if (!c.q) throw UsageError(c.command + ": --q is required");
  return *c.q;
}

RationalAngle jump_from(const RunConfig& c) {
  if (c.phi_rad && (c.p || c.q)) throw UsageError("give either --p/--q or --phi-rad, not both");
  if (c.phi_rad) return RationalAngle::from_radians(*c.phi_rad);
  return RationalAngle::from_reduced(BigInt(require_p(c)), BigInt(require_q(c)));
}

Angle length_from(const RunConfig& c) {
  if (c.length_pi && c.length_rad) throw UsageError("give either --length-pi or --length-rad");
  if (c.length_rad) return Angle::from_radians(*c.length_rad);
  if (!c.length_pi) throw UsageError(c.command + ": --length-pi or --length-rad is required");
  try {
    return Angle::pi_times(Rational(*c.length_pi));
  } catch (const std::exception&) {
    throw UsageError("--length-pi: expected n or n/d, got '" + *c.length_pi + "'");
  }
}

double named_real(const std::string& name) {
  if (name == "sqrt2") return std::numbers::sqrt2;
  if (name == "golden") return std::numbers::phi;
  if (name == "e") return std::numbers::e;
  if (name == "pi") return std::numbers::pi;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(name, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != name.size() || !std::isfinite(v)) throw UsageError("--x: cannot read '" + name + "'");
  return v;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::filesystem::path path(c.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("GRASSHOPPER_OUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path.string() + " for writing");
  f << text;
}

}  // namespace grasshopper::cli
