#include "rigrot/job_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rigrot {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorCode::Schema, msg); }

// Numbers keep their decimal spelling, so "0.1" becomes 1/10.
Rational rational_field(const json& j, const std::string& name) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      schema_error("'" + name + "' is not a rational number");
    }
  }
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) schema_error("'" + name + "' is not finite");
    return parse_rational(j.dump());
  }
  schema_error("'" + name + "' must be a number");
}

double number_field(const json& j, const std::string& name) {
  if (!j.is_number()) schema_error("'" + name + "' must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema_error("'" + name + "' is not finite");
  return x;
}

Vec3 vec3_field(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 3) schema_error("'" + name + "' must be an array of 3 numbers");
  return {number_field(j[0], name), number_field(j[1], name), number_field(j[2], name)};
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema_error("unknown key '" + key + "' in " + where);
  }
}

RigidTangent tangent_field(const json& j, const std::string& name) {
  if (!j.is_object()) schema_error("'" + name + "' must be an object");
  check_keys(j, {"time", "center", "omega"}, name);
  RigidTangent t;
  if (j.contains("time")) t.time = number_field(j["time"], name + ".time");
  if (j.contains("center")) t.center = vec3_field(j["center"], name + ".center");
  if (j.contains("omega")) t.omega = vec3_field(j["omega"], name + ".omega");
  return t;
}

FieldSpec field_spec(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    schema_error("'field' must be an object with a string 'type'");
  }
  FieldSpec f;
  const auto type = j["type"].get<std::string>();
  if (type == "none") {
    check_keys(j, {"type"}, "field");
  } else if (type == "constant") {
    check_keys(j, {"type", "E", "B"}, "field");
    f.kind = FieldSpec::Kind::Constant;
    if (j.contains("E")) f.e = vec3_field(j["E"], "field.E");
    if (j.contains("B")) f.b = vec3_field(j["B"], "field.B");
  } else if (type == "monopole") {
    check_keys(j, {"type", "nu", "q_norm"}, "field");
    if (!j.contains("nu") || !j.contains("q_norm")) schema_error("monopole field needs 'nu' and 'q_norm'");
    f.kind = FieldSpec::Kind::Monopole;
    f.nu = rational_field(j["nu"], "field.nu");
    f.q_norm = rational_field(j["q_norm"], "field.q_norm");
    if (sgn(f.nu) < 0 || sgn(f.q_norm) < 0) schema_error("monopole 'nu' and 'q_norm' must be non-negative");
  } else {
    schema_error("unknown field type '" + type + "'");
  }
  return f;
}

}  // namespace

const char* to_string(BundleRequest b) {
  switch (b) {
    case BundleRequest::Auto: return "auto";
    case BundleRequest::Trivial: return "trivial";
    case BundleRequest::Nontrivial: return "nontrivial";
    case BundleRequest::Both: return "both";
  }
  return "auto";
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "table";
}

BundleRequest parse_bundle_request(const std::string& s) {
  if (s == "auto") return BundleRequest::Auto;
  if (s == "trivial") return BundleRequest::Trivial;
  if (s == "nontrivial") return BundleRequest::Nontrivial;
  if (s == "both") return BundleRequest::Both;
  schema_error("bundle must be one of auto, trivial, nontrivial, both");
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  schema_error("output must be one of table, csv, json");
}

HalfInteger parse_half_integer(const std::string& s) {
  Rational r;
  try {
    r = parse_rational(s);
  } catch (const std::exception&) {
    schema_error("'" + s + "' is not a half-integer");
  }
  const Rational twice = 2 * r;
  if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) schema_error("'" + s + "' is not a half-integer");
  return HalfInteger::from_twice(static_cast<int>(twice.get_num().get_si()));
}

JobConfig parse_job_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  check_keys(doc, {"version", "particles", "hbar", "k", "bundle", "j_max", "field", "output", "tolerances", "em_split"},
             "job");
  if (!doc.contains("version") || doc["version"] != 1) schema_error("'version' must be 1");

  JobConfig cfg;
  if (!doc.contains("particles") || !doc["particles"].is_array()) schema_error("'particles' must be an array");
  for (const auto& p : doc["particles"]) {
    if (!p.is_object()) schema_error("each particle must be an object");
    check_keys(p, {"mass", "charge", "position"}, "particle");
    if (!p.contains("mass") || !p.contains("position")) schema_error("particle needs 'mass' and 'position'");
    cfg.particles.masses.push_back(number_field(p["mass"], "mass"));
    cfg.particles.charges.push_back(p.contains("charge") ? number_field(p["charge"], "charge") : 0.0);
    cfg.particles.positions.push_back(vec3_field(p["position"], "position"));
  }
  if (cfg.particles.size() < 2) schema_error("at least two particles are required");
  for (double m : cfg.particles.masses) {
    if (!(m > 0.0)) schema_error("particle masses must be positive");
  }

  if (doc.contains("hbar")) cfg.hbar = rational_field(doc["hbar"], "hbar");
  if (sgn(cfg.hbar) <= 0) schema_error("'hbar' must be positive");
  if (doc.contains("k")) cfg.k = rational_field(doc["k"], "k");
  if (doc.contains("bundle")) {
    if (!doc["bundle"].is_string()) schema_error("'bundle' must be a string");
    cfg.bundle = parse_bundle_request(doc["bundle"].get<std::string>());
  }
  if (doc.contains("j_max")) {
    const auto& j = doc["j_max"];
    if (!j.is_string() && !j.is_number()) schema_error("'j_max' must be a half-integer");
    cfg.j_max = parse_half_integer(j.is_string() ? j.get<std::string>() : j.dump());
    if (cfg.j_max.twice < 0) schema_error("'j_max' must be non-negative");
  }
  if (doc.contains("field")) cfg.field = field_spec(doc["field"]);
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) schema_error("'output' must be a string");
    cfg.output = parse_output_format(doc["output"].get<std::string>());
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) schema_error("'tolerances' must be an object");
    check_keys(t, {"rel", "abs", "spec"}, "tolerances");
    if (t.contains("rel")) cfg.tolerances.rel = number_field(t["rel"], "tolerances.rel");
    if (t.contains("abs")) cfg.tolerances.abs = number_field(t["abs"], "tolerances.abs");
    if (t.contains("spec")) cfg.tolerances.spec = number_field(t["spec"], "tolerances.spec");
    if (!(cfg.tolerances.rel > 0) || !(cfg.tolerances.abs > 0) || !(cfg.tolerances.spec > 0)) {
      schema_error("tolerances must be positive");
    }
  }
  if (doc.contains("em_split")) {
    const auto& s = doc["em_split"];
    if (!s.is_object()) schema_error("'em_split' must be an object");
    check_keys(s, {"v", "w"}, "em_split");
    EmSplitSpec spec;
    if (s.contains("v")) spec.v = tangent_field(s["v"], "em_split.v");
    if (s.contains("w")) spec.w = tangent_field(s["w"], "em_split.w");
    cfg.em_split = spec;
  }
  return cfg;
}

JobConfig load_job_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_config(buf.str());
}

}  // namespace rigrot
