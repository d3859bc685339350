#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "rigrot/classical_em.hpp"
#include "rigrot/common.hpp"
#include "rigrot/geometry.hpp"
#include "rigrot/rational.hpp"

namespace rigrot {

enum class BundleRequest { Auto, Trivial, Nontrivial, Both };
enum class OutputFormat { Table, Csv, Json };

const char* to_string(BundleRequest b);
const char* to_string(OutputFormat f);
BundleRequest parse_bundle_request(const std::string& s);  // throws Schema
OutputFormat parse_output_format(const std::string& s);    // throws Schema

struct FieldSpec {
  enum class Kind { None, Constant, Monopole };
  Kind kind = Kind::None;
  Vec3 e = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Rational nu = 0;
  Rational q_norm = 0;
};

/// The pair of rigid tangent vectors evaluated by `em-split`.
struct EmSplitSpec {
  RigidTangent v;
  RigidTangent w;
};

/// Version 1 job description.
struct JobConfig {
  ParticleSystem particles;
  Rational hbar = 1;
  Rational k = 0;
  BundleRequest bundle = BundleRequest::Auto;
  HalfInteger j_max = HalfInteger::integer(6);
  FieldSpec field;
  OutputFormat output = OutputFormat::Table;
  Tolerances tolerances;
  std::optional<EmSplitSpec> em_split;
};

/// Accepts 6, 1.5, "3/2" or "2". Throws Schema.
HalfInteger parse_half_integer(const std::string& s);

/// Throws Error(Schema) on malformed input and on schema violations.
JobConfig parse_job_config(const std::string& json_text);
JobConfig load_job_config(const std::filesystem::path& path);

}  // namespace rigrot
