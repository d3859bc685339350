#include "rigrot/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace rigrot {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorCode::Schema, msg); }

BundleKind bundle_from_name(const std::string& s) {
  if (s == "trivial") return BundleKind::Plus;
  if (s == "nontrivial") return BundleKind::Minus;
  schema_error("unknown bundle '" + s + "'");
}

LineSource source_from_name(const std::string& s) {
  if (s == "closed-form") return LineSource::ClosedForm;
  if (s == "diagonalized") return LineSource::Diagonalized;
  schema_error("unknown source '" + s + "'");
}

TopClass top_from_name(const std::string& s) {
  for (TopClass t : {TopClass::Spherical, TopClass::Symmetric, TopClass::Asymmetric, TopClass::Degenerate}) {
    if (s == to_string(t)) return t;
  }
  schema_error("unknown top class '" + s + "'");
}

HalfInteger half_from_json(const json& j) {
  if (!j.is_string()) schema_error("quantum numbers are strings");
  const Rational r(j.get<std::string>());
  const Rational twice = 2 * r;
  return HalfInteger::from_twice(static_cast<int>(twice.get_num().get_si()));
}

const char* space_name(SpaceKind k) { return k == SpaceKind::Bidegree ? "H_pq" : "H_l"; }

std::string l_text(const SpectralLine& line) { return line.l ? to_string(*line.l) : std::string(); }

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_table(std::ostream& out, const std::vector<Spectrum>& spectra) {
  for (std::size_t s = 0; s < spectra.size(); ++s) {
    const Spectrum& sp = spectra[s];
    if (s) out << "\n";
    out << "# bundle " << display_name(sp.meta.bundle) << ", top " << to_string(sp.meta.top) << ", momenta ("
        << format_number(sp.meta.momenta[0]) << ", " << format_number(sp.meta.momenta[1]) << ", "
        << format_number(sp.meta.momenta[2]) << "), hbar " << format_number(sp.meta.hbar) << ", k "
        << format_number(sp.meta.k) << ", j_max " << to_string(sp.meta.j_max) << "\n";
    for (const auto& w : sp.meta.warnings) out << "# warning: " << w << "\n";
    out << std::left << std::setw(6) << "j" << std::setw(6) << "l" << std::setw(22) << "energy" << std::setw(8)
        << "mult" << "source\n";
    for (const auto& line : sp.lines) {
      out << std::setw(6) << to_string(line.j) << std::setw(6) << (line.l ? l_text(line) : "-") << std::setw(22)
          << format_number(line.energy) << std::setw(8) << line.multiplicity << to_string(line.source) << "\n";
    }
    out << std::right;
  }
}

void write_csv(std::ostream& out, const std::vector<Spectrum>& spectra) {
  out << "bundle,j,l,energy,multiplicity,source\n";
  for (const auto& sp : spectra) {
    for (const auto& line : sp.lines) {
      out << display_name(line.bundle) << "," << to_string(line.j) << "," << l_text(line) << ","
          << format_number(line.energy) << "," << line.multiplicity << "," << to_string(line.source) << "\n";
    }
  }
}

json spectrum_to_json(const Spectrum& s) {
  json lines = json::array();
  for (const auto& line : s.lines) {
    json sections = json::array();
    for (const auto& ref : line.sections) sections.push_back({space_name(ref.space), ref.p, ref.q, ref.index});
    json jl = {{"energy", line.energy},
               {"energy_exact", line.exact_energy ? json(to_string(*line.exact_energy)) : json(nullptr)},
               {"j", to_string(line.j)},
               {"l", line.l ? json(to_string(*line.l)) : json(nullptr)},
               {"multiplicity", line.multiplicity},
               {"bundle", display_name(line.bundle)},
               {"source", to_string(line.source)},
               {"sections", sections}};
    lines.push_back(jl);
  }
  json groups = json::array();
  for (const auto& g : degeneracy_groups(s)) {
    groups.push_back({{"energy", g.energy},
                      {"energy_exact", g.exact_energy ? json(to_string(*g.exact_energy)) : json(nullptr)},
                      {"multiplicity", g.multiplicity},
                      {"lines", g.lines}});
  }
  return {{"meta",
           {{"top", to_string(s.meta.top)},
            {"momenta", s.meta.momenta},
            {"bundle", display_name(s.meta.bundle)},
            {"k", s.meta.k},
            {"hbar", s.meta.hbar},
            {"j_max", to_string(s.meta.j_max)},
            {"warnings", s.meta.warnings}}},
          {"total_dimension", s.total_dimension()},
          {"lines", lines},
          {"degeneracy_groups", groups}};
}

Spectrum spectrum_from_json(const json& j) {
  try {
    Spectrum s;
    const json& m = j.at("meta");
    s.meta.top = top_from_name(m.at("top").get<std::string>());
    s.meta.momenta = m.at("momenta").get<std::array<double, 3>>();
    s.meta.bundle = bundle_from_name(m.at("bundle").get<std::string>());
    s.meta.k = m.at("k").get<double>();
    s.meta.hbar = m.at("hbar").get<double>();
    s.meta.j_max = half_from_json(m.at("j_max"));
    s.meta.warnings = m.at("warnings").get<std::vector<std::string>>();
    for (const json& jl : j.at("lines")) {
      SpectralLine line;
      line.energy = jl.at("energy").get<double>();
      if (!jl.at("energy_exact").is_null()) line.exact_energy = Rational(jl["energy_exact"].get<std::string>());
      line.j = half_from_json(jl.at("j"));
      if (!jl.at("l").is_null()) line.l = half_from_json(jl["l"]);
      line.multiplicity = jl.at("multiplicity").get<int>();
      line.bundle = bundle_from_name(jl.at("bundle").get<std::string>());
      line.source = source_from_name(jl.at("source").get<std::string>());
      for (const json& ref : jl.at("sections")) {
        const auto kind = ref.at(0).get<std::string>();
        line.sections.push_back({kind == "H_l" ? SpaceKind::HarmonicR3 : SpaceKind::Bidegree, ref.at(1).get<int>(),
                                 ref.at(2).get<int>(), ref.at(3).get<int>()});
      }
      s.lines.push_back(std::move(line));
    }
    return s;
  } catch (const json::exception& e) {
    schema_error(std::string("malformed spectrum JSON: ") + e.what());
  }
}

void write_json(std::ostream& out, const std::vector<Spectrum>& spectra) {
  json doc = {{"version", 1}, {"spectra", json::array()}};
  for (const auto& s : spectra) doc["spectra"].push_back(spectrum_to_json(s));
  out << doc.dump(2) << "\n";
}

std::vector<Spectrum> spectra_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("spectra") || !doc["spectra"].is_array()) {
    schema_error("expected an object with a 'spectra' array");
  }
  std::vector<Spectrum> out;
  for (const auto& s : doc["spectra"]) out.push_back(spectrum_from_json(s));
  return out;
}

json classification_to_json(const Classification& c) {
  json bundles = json::array();
  for (BundleKind b : c.structures.bundles) bundles.push_back(display_name(b));
  json relatives = json::array();
  for (const auto& r : c.config.relatives) relatives.push_back({r.x(), r.y(), r.z()});
  json axes = json::array();
  for (int k = 0; k < 3; ++k) axes.push_back({c.momenta.axes(0, k), c.momenta.axes(1, k), c.momenta.axes(2, k)});
  return {{"center", {c.config.center.x(), c.config.center.y(), c.config.center.z()}},
          {"relatives", relatives},
          {"characteristic", c.config.characteristic},
          {"degeneracy", to_string(c.config.degeneracy)},
          {"momenta", c.momenta.values},
          {"axes", axes},
          {"top", to_string(c.momenta.top)},
          {"scalar_curvature", c.curvature},
          {"rotational_space", std::string(c.structures.rotational_space)},
          {"second_cohomology", std::string(c.structures.second_cohomology)},
          {"bundles", bundles}};
}

void write_classification_table(std::ostream& out, const Classification& c) {
  out << "characteristic    " << c.config.characteristic << "\n";
  out << "degeneracy        " << to_string(c.config.degeneracy) << "\n";
  out << "center            (" << format_number(c.config.center.x()) << ", " << format_number(c.config.center.y())
      << ", " << format_number(c.config.center.z()) << ")\n";
  out << "momenta           " << format_number(c.momenta.values[0]) << ", " << format_number(c.momenta.values[1])
      << ", " << format_number(c.momenta.values[2]) << "\n";
  out << "top               " << to_string(c.momenta.top) << "\n";
  out << "scalar curvature  " << format_number(c.curvature) << "\n";
  out << "rotational space  " << c.structures.rotational_space << " (H^2 = " << c.structures.second_cohomology
      << ")\n";
  out << "bundles           ";
  for (std::size_t k = 0; k < c.structures.bundles.size(); ++k) {
    out << (k ? ", " : "") << display_name(c.structures.bundles[k]);
  }
  out << "\n";
}

void write_eigensections(std::ostream& out, const std::vector<Spectrum>& spectra,
                         const std::vector<SectionTexts>& texts) {
  for (std::size_t s = 0; s < spectra.size(); ++s) {
    const Spectrum& sp = spectra[s];
    out << "# bundle " << display_name(sp.meta.bundle) << "\n";
    for (std::size_t i = 0; i < sp.lines.size(); ++i) {
      const SpectralLine& line = sp.lines[i];
      out << "E = " << format_number(line.energy) << "  j = " << to_string(line.j);
      if (line.l) out << "  l = " << to_string(*line.l);
      out << "  multiplicity " << line.multiplicity << "\n";
      for (std::size_t k = 0; k < line.sections.size(); ++k) {
        const SectionRef& ref = line.sections[k];
        out << "  " << space_name(ref.space) << "[" << ref.p;
        if (ref.space == SpaceKind::Bidegree) out << "," << ref.q;
        out << "]#" << ref.index << "  " << texts.at(s).at(i).at(k) << "\n";
      }
    }
  }
}

json em_split_to_json(const EmSplitResult& r) {
  return {{"cen", r.split.cen},
          {"rot", r.split.rot},
          {"mixed", r.split.mixed},
          {"sum", r.split.total()},
          {"unsplit", r.unsplit},
          {"decoupled", r.decoupling.decoupled},
          {"charges_proportional", r.decoupling.charges_proportional},
          {"field_affine", r.decoupling.field_affine},
          {"report", r.decoupling.report}};
}

void write_em_split_table(std::ostream& out, const EmSplitResult& r) {
  out << "cen      " << format_number(r.split.cen) << "\n";
  out << "rot      " << format_number(r.split.rot) << "\n";
  out << "mixed    " << format_number(r.split.mixed) << "\n";
  out << "sum      " << format_number(r.split.total()) << "\n";
  out << "unsplit  " << format_number(r.unsplit) << "\n";
  out << "decoupling: " << r.decoupling.report << "\n";
}

}  // namespace rigrot
