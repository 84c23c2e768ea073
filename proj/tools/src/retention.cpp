#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "grasshopper/br_table.hpp"
#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/monte_carlo.hpp"
#include "grasshopper/serialization.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper::cli {

namespace {

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("retention: --lawn is required");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("retention: cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int circle(const RunConfig& c) {
  const ArcSet lawn = arc_set_from_json(read_file(c.lawn_path));
  const RationalAngle jump = jump_from(c);
  const Scalar value = retention(lawn, jump);
  const OptimalValue best = optimal_antipodal_value(jump, LawnMode::single);
  CircleRow row{jump, "file", value, best.value, value.is_exact() && best.attained && value == best.value};
  emit(c, circle_csv_header() + circle_csv_row(row));
  return kSuccess;
}

int sphere(const RunConfig& c) {
  const CoggedLawn lawn = cogged_lawn_from_json(read_file(c.lawn_path));
  SphereRow row;
  row.lawn_case = lawn.lawn_case();
  row.p = lawn.p;
  row.q_or_n = lawn.lawn_case() == LawnCase::irrational ? lawn.n : lawn.q;
  row.phi = lawn.phi();
  row.r = lawn.radius();
  row.seed = c.seed;
  if (lawn.lawn_case() != LawnCase::hemisphere) {
    QuadratureOptions opts;
    opts.rel_tol = c.rel_tol;
    const auto cert = ll_minus_ss(lawn, opts);
    row.aa_total = cert.aa_total.value;
    row.an_minus_as_total = cert.an_minus_as_total.value;
    row.ll_minus_ss = cert.value.value;
    row.std_error = cert.value.error;
  }
  if (c.samples > 0) {
    const auto mc = retention_mc(lawn, lawn.phi(), c.samples, c.seed, c.threads);
    row.mc_retention = mc.retention;
    row.mc_std_error = mc.std_error;
  }
  emit(c, sphere_csv_header() + sphere_csv_row(row));
  return kSuccess;
}

}  // namespace

int cmd_retention(const RunConfig& c) {
  if (c.target == "circle") return circle(c);
  if (c.target == "sphere") return sphere(c);
  throw UsageError("retention: domain must be circle or sphere");
}

}  // namespace grasshopper::cli
