#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "grasshopper/errors.hpp"

using namespace grasshopper;
using namespace grasshopper::cli;

namespace {

void add_jump(CLI::App* app, RunConfig& c) {
  app->add_option("--p", c.p, "Jump numerator, in units of pi");
  app->add_option("--q", c.q, "Jump denominator");
  app->add_option("--phi-rad", c.phi_rad, "Jump in radians");
}

void add_output(CLI::App* app, RunConfig& c) {
  app->add_option("-o,--out", c.out, "Output file (default stdout; relative to $GRASSHOPPER_OUT_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Grasshopper retention engine for the circle and the sphere"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a lawn and write it as JSON");
  construct
      ->add_option("kind", c.target,
                   "circle-general | circle-irrational | circle-antipodal-even | circle-antipodal-odd | "
                   "sphere-hemisphere | sphere-peven | sphere-irrational | sphere-podd")
      ->required();
  add_jump(construct, c);
  construct->add_option("--length-pi", c.length_pi, "Lawn length as n/d, in units of pi");
  construct->add_option("--length-rad", c.length_rad, "Lawn length in radians");
  construct->add_option("--eps", c.eps, "Arc width for circle-irrational")->capture_default_str();
  construct->add_option("--r", c.r, "Cap radius")->capture_default_str();
  construct->add_option("--n", c.n, "Cap count for sphere-irrational (0: automatic)")->capture_default_str();
  add_output(construct, c);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a CSV report");
  verify
      ->add_option("suite", c.target,
                   "circle-exact | circle-orbit | diophantine | sphere-asymptotics | sphere-improvement")
      ->required();
  add_jump(verify, c);
  verify->add_option("--phi-case", c.phi_case, "peven | podd | irrational");
  verify->add_option("--r", c.r, "Cap radius")->capture_default_str();
  verify->add_option("--n", c.n, "Cap count for irrational (0: automatic)")->capture_default_str();
  verify->add_option("--x", c.x, "sqrt2 | golden | e | pi | decimal")->capture_default_str();
  verify->add_option("--max-q", c.max_q, "Largest denominator");
  verify->add_option("--rel-tol", c.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  add_output(verify, c);

  auto* sweep = app.add_subcommand("sweep", "Optimal circle retention over a jump grid");
  sweep->add_option("--max-q", c.max_q, "Rational grid p pi/q for q up to this value");
  sweep->add_option("--float-grid", c.float_grid, "Number of float jumps in (0, 2 pi)");
  sweep->add_option("--threads", c.threads, "Worker threads (0: all cores)")->capture_default_str();
  add_output(sweep, c);

  auto* ret = app.add_subcommand("retention", "Retention of a lawn read from JSON");
  ret->add_option("domain", c.target, "circle | sphere")->required();
  ret->add_option("--lawn", c.lawn_path, "Lawn JSON file")->required();
  add_jump(ret, c);
  ret->add_option("--samples", c.samples, "Monte Carlo samples (0: skip)")->capture_default_str();
  ret->add_option("--seed", c.seed, "Monte Carlo seed")->capture_default_str();
  ret->add_option("--threads", c.threads, "Worker threads (0: all cores)")->capture_default_str();
  ret->add_option("--rel-tol", c.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  add_output(ret, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(c);
    if (verify->parsed()) return cmd_verify(c);
    if (sweep->parsed()) return cmd_sweep(c);
    return cmd_retention(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const ValidityError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kNumeric;
  }
}
