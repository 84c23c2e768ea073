#include "grasshopper/serialization.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

using nlohmann::json;

json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& r) {
  return {{"num", bigint_to_json(numerator(r))}, {"den", bigint_to_json(denominator(r))}};
}

Rational rational_from_json(const json& j) {
  const BigInt den = bigint_from_json(j.at("den"));
  if (den <= 0) throw InvalidArgument("denominator must be positive");
  return Rational(bigint_from_json(j.at("num")), den);
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string arc_set_to_json(const ArcSet& set, int indent) {
  json arcs = json::array();
  for (const auto& a : set.arcs()) {
    if (a.is_exact()) {
      arcs.push_back({{"kind", "rational"},
                      {"start", rational_to_json(a.start.pi_multiple())},
                      {"end", rational_to_json(a.end.pi_multiple())}});
    } else {
      arcs.push_back({{"kind", "float"}, {"start_f", a.start.radians()}, {"end_f", a.end.radians()}});
    }
  }
  return json{{"arcs", arcs}}.dump(indent);
}

ArcSet arc_set_from_json(const std::string& text) {
  const json doc = parse(text);
  try {
    std::vector<Arc> arcs;
    for (const auto& a : doc.at("arcs")) {
      const auto kind = a.at("kind").get<std::string>();
      if (kind == "rational") {
        arcs.push_back({Angle::pi_times(rational_from_json(a.at("start"))),
                        Angle::pi_times(rational_from_json(a.at("end")))});
      } else if (kind == "float") {
        arcs.push_back({Angle::from_radians(a.at("start_f").get<double>()),
                        Angle::from_radians(a.at("end_f").get<double>())});
      } else {
        throw InvalidArgument("unknown arc kind: " + kind);
      }
    }
    return ArcSet::from_canonical(std::move(arcs));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed arc set: ") + e.what());
  }
}

std::string cogged_lawn_to_json(const CoggedLawn& lawn, int indent) {
  auto caps_json = [](const std::vector<CapSpec>& caps) {
    json out = json::array();
    for (const auto& c : caps) out.push_back({{"theta", c.center_theta}, {"r", c.radius_r}, {"s", c.scale_s}});
    return out;
  };
  json adjacency = json::array();
  for (const auto& pr : lawn.adjacency()) adjacency.push_back({pr.from, pr.to});
  const json doc{{"case", to_string(lawn.lawn_case())},
                 {"phi", lawn.phi()},
                 {"r", lawn.radius()},
                 {"p", lawn.p},
                 {"q", lawn.q},
                 {"n", lawn.n},
                 {"caps", caps_json(lawn.caps())},
                 {"cups", caps_json(lawn.cups())},
                 {"adjacency", adjacency}};
  return doc.dump(indent);
}

CoggedLawn cogged_lawn_from_json(const std::string& text) {
  const json doc = parse(text);
  try {
    const LawnCase c = lawn_case_from_string(doc.at("case").get<std::string>());
    const double phi = doc.at("phi").get<double>();
    if (c == LawnCase::hemisphere) return CoggedLawn::hemisphere(phi);
    auto read_caps = [](const json& arr, CapSpec::Polarity pol) {
      std::vector<CapSpec> out;
      for (const auto& e : arr) {
        out.push_back({e.at("theta").get<double>(), e.at("r").get<double>(), e.at("s").get<double>(), pol});
      }
      return out;
    };
    std::vector<CapPair> adjacency;
    for (const auto& e : doc.at("adjacency")) {
      adjacency.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
    }
    CoggedLawn lawn(c, phi, doc.at("r").get<double>(), read_caps(doc.at("caps"), CapSpec::Polarity::cap),
                    read_caps(doc.at("cups"), CapSpec::Polarity::cup), std::move(adjacency));
    lawn.p = doc.value("p", 0LL);
    lawn.q = doc.value("q", 0LL);
    lawn.n = doc.value("n", 0LL);
    return lawn;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed lawn: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_scalar(const Scalar& x) {
  if (!x.is_exact()) return format_double(x.to_double());
  return x.exact().str();
}

std::string circle_csv_header() {
  return std::string(kCircleCsvVersion) +
         "\njump_num,jump_den_or_float,construction,retention_num,retention_den,bound,attained_flag\n";
}

std::string circle_csv_row(const CircleRow& row) {
  std::ostringstream os;
  if (row.jump.is_exact()) {
    os << row.jump.numerator().str() << ',' << row.jump.denominator().str();
  } else {
    os << ',' << format_double(row.jump.radians());
  }
  os << ',' << row.construction << ',';
  if (row.retention.is_exact()) {
    os << numerator(row.retention.exact()).str() << ',' << denominator(row.retention.exact()).str();
  } else {
    os << format_double(row.retention.to_double()) << ',';
  }
  os << ',' << format_scalar(row.bound) << ',' << (row.attained ? 1 : 0) << '\n';
  return os.str();
}

std::string sphere_csv_header() {
  return std::string(kSphereCsvVersion) +
         "\ncase,p,q_or_n,phi,r,aa_total,aN_minus_aS_total,ll_minus_ss,stderr,mc_retention,"
         "mc_stderr,seed\n";
}

std::string sphere_csv_row(const SphereRow& row) {
  std::ostringstream os;
  os << to_string(row.lawn_case) << ',' << row.p << ',' << row.q_or_n << ',' << format_double(row.phi)
     << ',' << format_double(row.r) << ',' << format_double(row.aa_total) << ','
     << format_double(row.an_minus_as_total) << ',' << format_double(row.ll_minus_ss) << ','
     << format_double(row.std_error) << ','
     << (row.mc_retention ? format_double(*row.mc_retention) : std::string()) << ','
     << (row.mc_std_error ? format_double(*row.mc_std_error) : std::string()) << ',' << row.seed
     << '\n';
  return os.str();
}

}  // namespace grasshopper
