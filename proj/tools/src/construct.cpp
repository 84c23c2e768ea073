#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/serialization.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper::cli {

namespace {

std::string circle(const ArcSet& s) { return arc_set_to_json(s) + "\n"; }
std::string sphere(const CoggedLawn& l) { return cogged_lawn_to_json(l) + "\n"; }

double phi_of(const RunConfig& c) {
  if (!c.phi_rad) throw UsageError(c.command + ": --phi-rad is required");
  return *c.phi_rad;
}

}  // namespace

int cmd_construct(const RunConfig& c) {
  const std::string& kind = c.target;
  std::string text;
  if (kind == "circle-general") {
    text = circle(construct_general(length_from(c), require_p(c), require_q(c)));
  } else if (kind == "circle-irrational") {
    text = circle(construct_irrational(length_from(c).radians(), phi_of(c), c.eps));
  } else if (kind == "circle-antipodal-even") {
    text = circle(construct_antipodal_even(require_q(c)));
  } else if (kind == "circle-antipodal-odd") {
    const auto lawns = construct_antipodal_odd(require_p(c), require_q(c));
    nlohmann::ordered_json j;
    j["orbit_lawn"] = nlohmann::ordered_json::parse(arc_set_to_json(lawns.orbit_lawn));
    j["demi_lawns"] = nlohmann::ordered_json::parse(arc_set_to_json(lawns.demi_lawns));
    text = j.dump(2) + "\n";
  } else if (kind == "sphere-hemisphere") {
    text = sphere(CoggedLawn::hemisphere(phi_of(c)));
  } else if (kind == "sphere-peven") {
    text = sphere(construct_peven(require_p(c), require_q(c), c.r));
  } else if (kind == "sphere-irrational") {
    text = sphere(construct_irrational(phi_of(c), c.r, c.n));
  } else if (kind == "sphere-podd") {
    text = sphere(construct_podd(require_p(c), require_q(c), c.r));
  } else {
    throw UsageError("construct: unknown construction '" + kind + "'");
  }
  emit(c, text);
  return kSuccess;
}

}  // namespace grasshopper::cli
