#include <sstream>

#include <gtest/gtest.h>

#include "rigrot/job_config.hpp"
#include "rigrot/pipeline.hpp"
#include "rigrot/serialize.hpp"

using namespace rigrot;

namespace {

const std::string kData = RIGROT_TEST_DATA;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

std::string csv(const std::vector<Spectrum>& s) {
  std::ostringstream out;
  write_csv(out, s);
  return out.str();
}

}  // namespace

TEST(JobConfig, ParsesAllFields) {
  const JobConfig job = parse_job_config(R"({
    "version": 1,
    "particles": [{"mass": 1, "charge": 0.5, "position": [0, 0, 0]},
                  {"mass": 2, "position": [1, 0, 0]}],
    "hbar": 0.1, "k": "1/3", "bundle": "both", "j_max": "5/2",
    "field": {"type": "constant", "E": [1, 2, 3], "B": [0, 0, 1]},
    "output": "csv", "tolerances": {"rel": 1e-8, "abs": 1e-10, "spec": 1e-7},
    "em_split": {"v": {"time": 1, "omega": [0, 0, 1]}}
  })");
  EXPECT_EQ(job.particles.size(), 2u);
  EXPECT_EQ(job.particles.charges[1], 0.0);
  EXPECT_EQ(job.hbar, make_rational(1, 10));
  EXPECT_EQ(job.k, make_rational(1, 3));
  EXPECT_EQ(job.bundle, BundleRequest::Both);
  EXPECT_EQ(job.j_max.twice, 5);
  EXPECT_EQ(job.field.kind, FieldSpec::Kind::Constant);
  EXPECT_EQ(job.field.e, Vec3(1, 2, 3));
  EXPECT_EQ(job.output, OutputFormat::Csv);
  EXPECT_EQ(job.tolerances.spec, 1e-7);
  ASSERT_TRUE(job.em_split.has_value());
  EXPECT_EQ(job.em_split->v.omega, Vec3(0, 0, 1));
}

TEST(JobConfig, Defaults) {
  const JobConfig job = parse_job_config(R"({"version": 1, "particles": [
    {"mass": 1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}]})");
  EXPECT_EQ(job.hbar, Rational(1));
  EXPECT_EQ(job.k, Rational(0));
  EXPECT_EQ(job.bundle, BundleRequest::Auto);
  EXPECT_EQ(job.j_max.twice, 12);
  EXPECT_EQ(job.field.kind, FieldSpec::Kind::None);
  EXPECT_EQ(job.output, OutputFormat::Table);
}

TEST(JobConfig, SchemaViolations) {
  const std::vector<std::string> bad{
      "not json",
      R"({"particles": []})",
      R"({"version": 2, "particles": []})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0, 0]}]})",
      R"({"version": 1, "particles": [{"mass": -1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}]})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0]}, {"mass": 1, "position": [1, 0, 0]}]})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}], "bundle": "odd"})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}], "j_max": "1/3"})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}], "hbar": 0})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}], "extra": 1})",
      R"({"version": 1, "particles": [{"mass": 1, "position": [0, 0, 0]}, {"mass": 1, "position": [1, 0, 0]}], "field": {"type": "monopole"}})",
  };
  for (const auto& text : bad) {
    EXPECT_EQ(code_of([&] { parse_job_config(text); }), ErrorCode::Schema) << text;
  }
}

TEST(Pipeline, ClassifiesTheSampleBodies) {
  const Classification dip = classify_job(load_job_config(kData + "/dipole.json"));
  EXPECT_EQ(dip.config.degeneracy, DegeneracyClass::Degenerate);
  EXPECT_NEAR(dip.momenta.common_momentum(), 2.0, 1e-14);
  EXPECT_EQ(dip.structures.bundles.size(), 1u);

  const Classification tet = classify_job(load_job_config(kData + "/tetrahedron.json"));
  EXPECT_EQ(tet.config.degeneracy, DegeneracyClass::StronglyNonDegenerate);
  EXPECT_EQ(tet.momenta.top, TopClass::Spherical);
  EXPECT_EQ(tet.structures.bundles.size(), 2u);

  const Classification water = classify_job(load_job_config(kData + "/water.json"));
  EXPECT_EQ(water.config.degeneracy, DegeneracyClass::WeaklyNonDegenerate);
  EXPECT_EQ(water.momenta.top, TopClass::Asymmetric);
}

TEST(Pipeline, BundleResolution) {
  EXPECT_EQ(resolve_bundles(BundleRequest::Auto, DegeneracyClass::Degenerate).size(), 1u);
  EXPECT_EQ(resolve_bundles(BundleRequest::Auto, DegeneracyClass::WeaklyNonDegenerate).size(), 2u);
  EXPECT_EQ(code_of([] { resolve_bundles(BundleRequest::Nontrivial, DegeneracyClass::Degenerate); }),
            ErrorCode::InvalidBundle);
  EXPECT_EQ(code_of([] { resolve_bundles(BundleRequest::Both, DegeneracyClass::Degenerate); }), ErrorCode::InvalidBundle);
}

TEST(Pipeline, SphericalBodyBothBundlesUpToJOne) {
  const JobConfig job = load_job_config(kData + "/octahedron.json");
  const std::string out = csv(spectra_for_job(job));
  EXPECT_EQ(out,
            "bundle,j,l,energy,multiplicity,source\n"
            "trivial,0,,0,1,closed-form\n"
            "trivial,1,,1,9,closed-form\n"
            "nontrivial,1/2,,0.375,4,closed-form\n");
}

TEST(Pipeline, SphericalUnitMomentEnergies) {
  JobConfig job = load_job_config(kData + "/octahedron.json");
  job.bundle = BundleRequest::Trivial;
  job.j_max = HalfInteger::integer(3);
  const auto s = spectra_for_job(job);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(*s[0].lines[0].exact_energy, Rational(0));
  EXPECT_EQ(*s[0].lines[1].exact_energy, Rational(1));
  EXPECT_EQ(*s[0].lines[2].exact_energy, Rational(3));
  EXPECT_EQ(*s[0].lines[3].exact_energy, Rational(6));
}

TEST(Pipeline, ErrorsMapToCodes) {
  EXPECT_EQ(code_of([] { spectra_for_job(load_job_config(kData + "/coincident.json")); }), ErrorCode::AllCoincident);
  JobConfig dip = load_job_config(kData + "/dipole.json");
  dip.bundle = BundleRequest::Nontrivial;
  EXPECT_EQ(code_of([&] { spectra_for_job(dip); }), ErrorCode::InvalidBundle);

  const JobConfig mono = load_job_config(kData + "/monopole.json");
  EXPECT_EQ(code_of([&] { spectra_for_job(mono); }), ErrorCode::InvalidBundle);
  RunOptions fixed;
  fixed.fixed_point = true;
  EXPECT_NO_THROW(spectra_for_job(mono, fixed));

  JobConfig mono_dipole = load_job_config(kData + "/dipole.json");
  mono_dipole.field.kind = FieldSpec::Kind::Monopole;
  EXPECT_EQ(code_of([&] { spectra_for_job(mono_dipole, fixed); }), ErrorCode::InvalidBundle);
}

TEST(Pipeline, DegenerateAndAsymmetricRoutes) {
  const auto dip = spectra_for_job(load_job_config(kData + "/dipole.json"));
  ASSERT_EQ(dip.size(), 1u);
  EXPECT_EQ(dip[0].meta.top, TopClass::Degenerate);
  EXPECT_EQ(dip[0].lines[1].multiplicity, 3);
  EXPECT_EQ(*dip[0].lines[1].exact_energy, make_rational(1, 2));

  const auto water = spectra_for_job(load_job_config(kData + "/water.json"));
  ASSERT_EQ(water.size(), 2u);
  EXPECT_EQ(water[0].lines[0].source, LineSource::Diagonalized);
  EXPECT_EQ(water[0].total_dimension(), 1 + 9 + 25);
  EXPECT_EQ(water[1].total_dimension(), 4 + 16);
}

TEST(Serialize, JsonRoundTrip) {
  std::vector<Spectrum> all;
  for (const char* name : {"/octahedron.json", "/water.json", "/dipole.json", "/triangle.json"}) {
    for (auto& s : spectra_for_job(load_job_config(kData + name))) all.push_back(std::move(s));
  }
  RunOptions fixed;
  fixed.fixed_point = true;
  for (auto& s : spectra_for_job(load_job_config(kData + "/monopole.json"), fixed)) all.push_back(std::move(s));

  std::ostringstream out;
  write_json(out, all);
  const auto back = spectra_from_json(out.str());
  ASSERT_EQ(back.size(), all.size());
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_TRUE(back[k] == all[k]) << "spectrum " << k;
  EXPECT_EQ(code_of([] { spectra_from_json("{}"); }), ErrorCode::Schema);
}

TEST(Serialize, DeterministicText) {
  const JobConfig job = load_job_config(kData + "/water.json");
  std::ostringstream a, b;
  write_table(a, spectra_for_job(job));
  write_table(b, spectra_for_job(job));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(-0.0), "0");
}

TEST(Serialize, EigensectionsForClosedAndDiagonalizedLines) {
  JobConfig job = load_job_config(kData + "/water.json");
  job.j_max = HalfInteger::integer(1);
  const auto spectra = spectra_for_job(job);
  const SectionTexts texts = eigensection_texts(job, spectra[0]);
  ASSERT_EQ(texts.size(), spectra[0].lines.size());
  for (std::size_t i = 0; i < texts.size(); ++i) EXPECT_EQ(texts[i].size(), spectra[0].lines[i].sections.size());

  JobConfig oct = load_job_config(kData + "/octahedron.json");
  const auto sph = spectra_for_job(oct);
  const SectionTexts st = eigensection_texts(oct, sph[1]);
  EXPECT_EQ(st[0].size(), 4u);
  EXPECT_EQ(st[0][0], "z1");
  EXPECT_EQ(st[0][2], "zb2");
}
