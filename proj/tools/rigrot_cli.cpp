#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rigrot/classical_em.hpp"
#include "rigrot/job_config.hpp"
#include "rigrot/pipeline.hpp"
#include "rigrot/serialize.hpp"
#include "rigrot/verify.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kSchema = 2, kDegenerate = 3, kInvalidBundle = 4 };

struct Flags {
  std::string config;
  std::optional<std::string> output;
  std::optional<std::string> j_max;
  std::optional<std::string> bundle;
  std::optional<std::string> hbar;
  std::optional<std::string> k;
  std::optional<double> tol_rel;
  std::optional<double> tol_spec;
  bool fixed_point = false;
  bool serial = false;
  std::string inject;
};

int exit_code(const rigrot::Error& e) {
  switch (e.code()) {
    case rigrot::ErrorCode::AllCoincident: return kDegenerate;
    case rigrot::ErrorCode::InvalidBundle: return kInvalidBundle;
    case rigrot::ErrorCode::Schema:
    case rigrot::ErrorCode::TooFewParticles:
    case rigrot::ErrorCode::NonPositiveMass:
    case rigrot::ErrorCode::InvalidArgument: return kSchema;
    default: return kVerifyFailed;
  }
}

rigrot::Rational rational_flag(const std::string& s, const char* name) {
  try {
    return rigrot::parse_rational(s);
  } catch (const std::exception&) {
    throw rigrot::Error(rigrot::ErrorCode::Schema, std::string("--") + name + " is not a number: " + s);
  }
}

// The config file supplies defaults; flags override it.
rigrot::JobConfig load(const Flags& f) {
  if (f.config.empty()) throw rigrot::Error(rigrot::ErrorCode::Schema, "--config is required");
  rigrot::JobConfig job = rigrot::load_job_config(f.config);
  if (f.output) job.output = rigrot::parse_output_format(*f.output);
  if (f.j_max) {
    job.j_max = rigrot::parse_half_integer(*f.j_max);
    if (job.j_max.twice < 0) throw rigrot::Error(rigrot::ErrorCode::Schema, "--j-max must be non-negative");
  }
  if (f.bundle) job.bundle = rigrot::parse_bundle_request(*f.bundle);
  if (f.hbar) {
    job.hbar = rational_flag(*f.hbar, "hbar");
    if (sgn(job.hbar) <= 0) throw rigrot::Error(rigrot::ErrorCode::Schema, "--hbar must be positive");
  }
  if (f.k) job.k = rational_flag(*f.k, "k");
  if (f.tol_rel) job.tolerances.rel = *f.tol_rel;
  if (f.tol_spec) job.tolerances.spec = *f.tol_spec;
  if (job.j_max > rigrot::kJMaxCap) throw rigrot::Error(rigrot::ErrorCode::Schema, "j_max must not exceed 25");
  return job;
}

rigrot::RunOptions run_options(const Flags& f) {
  rigrot::RunOptions run;
  run.fixed_point = f.fixed_point;
  run.parallel = !f.serial;
  return run;
}

void print_warnings(const std::vector<rigrot::Spectrum>& spectra) {
  for (const auto& s : spectra)
    for (const auto& w : s.meta.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_classify(const Flags& f) {
  const rigrot::JobConfig job = load(f);
  const rigrot::Classification c = rigrot::classify_job(job);
  if (job.output == rigrot::OutputFormat::Json) {
    std::cout << rigrot::classification_to_json(c).dump(2) << "\n";
  } else {
    rigrot::write_classification_table(std::cout, c);
  }
  return kOk;
}

int cmd_spectrum(const Flags& f) {
  const rigrot::JobConfig job = load(f);
  const auto spectra = rigrot::spectra_for_job(job, run_options(f));
  print_warnings(spectra);
  switch (job.output) {
    case rigrot::OutputFormat::Table: rigrot::write_table(std::cout, spectra); break;
    case rigrot::OutputFormat::Csv: rigrot::write_csv(std::cout, spectra); break;
    case rigrot::OutputFormat::Json: rigrot::write_json(std::cout, spectra); break;
  }
  return kOk;
}

int cmd_eigensections(const Flags& f) {
  const rigrot::JobConfig job = load(f);
  const auto spectra = rigrot::spectra_for_job(job, run_options(f));
  print_warnings(spectra);
  std::vector<rigrot::SectionTexts> texts;
  for (const auto& s : spectra) texts.push_back(rigrot::eigensection_texts(job, s, run_options(f)));
  rigrot::write_eigensections(std::cout, spectra, texts);
  return kOk;
}

int cmd_em_split(const Flags& f) {
  const rigrot::JobConfig job = load(f);
  if (job.field.kind == rigrot::FieldSpec::Kind::Monopole) {
    throw rigrot::Error(rigrot::ErrorCode::Schema, "em-split needs a constant field or none");
  }
  if (!job.em_split) throw rigrot::Error(rigrot::ErrorCode::Schema, "em-split needs an 'em_split' section");
  const rigrot::RigidConfiguration cfg = rigrot::canonicalize(job.particles, job.tolerances);
  const rigrot::PatternField field = rigrot::PatternField::uniform(job.field.e, job.field.b);
  rigrot::EmSplitResult r;
  r.split = rigrot::split_field(job.particles, cfg, field, job.em_split->v, job.em_split->w);
  r.unsplit = rigrot::unsplit_field(job.particles, cfg, field, job.em_split->v, job.em_split->w);
  r.decoupling = rigrot::decoupling_check(job.particles, field, job.tolerances.rel);
  if (job.output == rigrot::OutputFormat::Json) {
    std::cout << rigrot::em_split_to_json(r).dump(2) << "\n";
  } else {
    rigrot::write_em_split_table(std::cout, r);
  }
  return kOk;
}

std::string seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", t);
  return buf;
}

int cmd_verify(const Flags& f) {
  rigrot::VerifyOptions options;
  if (f.j_max) options.j_max = rigrot::parse_half_integer(*f.j_max);
  options.parallel = !f.serial;
  if (f.inject == "casimir-sign") {
    options.fault = rigrot::Fault::CasimirSign;
  } else if (!f.inject.empty()) {
    throw rigrot::Error(rigrot::ErrorCode::Schema, "unknown fault '" + f.inject + "'");
  }
  const rigrot::VerifyReport report = rigrot::run_verify(options);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << seconds(c.seconds) << " s)";
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  std::cout << "total " << seconds(report.seconds) << " s\n";
  if (const auto* failure = report.first_failure()) {
    std::cerr << "verify failed: " << failure->name << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum rotational spectra of rigid bodies"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--config", f.config, "JSON job file");
  app.add_option("--output", f.output, "table, csv or json");
  app.add_option("--j-max", f.j_max, "largest j (half-integer)");
  app.add_option("--bundle", f.bundle, "auto, trivial, nontrivial or both");
  app.add_option("--hbar", f.hbar, "reduced Planck constant");
  app.add_option("--k", f.k, "curvature coupling");
  app.add_option("--tol-rel", f.tol_rel, "relative tolerance for geometry and momenta");
  app.add_option("--tol-spec", f.tol_spec, "relative tolerance for merging eigenvalues");
  app.add_flag("--fixed-point", f.fixed_point, "body rotates about a fixed point (required for the monopole field)");
  app.add_flag("--serial", f.serial, "use the serial block kernels");
  app.add_option("--inject", f.inject, "inject a fault into verify")->group("");

  int (*command)(const Flags&) = nullptr;
  app.add_subcommand("classify", "degeneracy, principal momenta, top class, curvature, bundles")
      ->callback([&] { command = cmd_classify; });
  app.add_subcommand("spectrum", "energy levels per bundle")->callback([&] { command = cmd_spectrum; });
  app.add_subcommand("eigensections", "energy levels with their eigensections")
      ->callback([&] { command = cmd_eigensections; });
  app.add_subcommand("em-split", "center, rotational and mixed field components")
      ->callback([&] { command = cmd_em_split; });
  app.add_subcommand("verify", "run the invariant and oracle suite")->callback([&] { command = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }

  try {
    return command(f);
  } catch (const rigrot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
