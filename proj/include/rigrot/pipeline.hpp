#pragma once

#include <string>
#include <vector>

#include "rigrot/geometry.hpp"
#include "rigrot/inertia.hpp"
#include "rigrot/job_config.hpp"
#include "rigrot/quantum_structures.hpp"
#include "rigrot/spectra.hpp"

namespace rigrot {

/// Everything `classify` reports about a body.
struct Classification {
  RigidConfiguration config;
  PrincipalMomenta momenta;
  double curvature = 0.0;
  StructureSet structures;
};

Classification classify_job(const JobConfig& job);

/// Rational stand-in for a computed momentum: the nearest fraction with
/// denominator at most 10^6 when it lies within rel_tol, else the exact
/// binary value.
Rational momentum_rational(double x, double rel_tol = 1e-9);

/// Bundles to compute for a request. Throws InvalidBundle when a
/// non-trivial bundle is requested on a collinear body.
std::vector<BundleKind> resolve_bundles(BundleRequest request, DegeneracyClass degeneracy);

struct RunOptions {
  bool fixed_point = false;
  bool parallel = true;
  CurvatureConvention convention = CurvatureConvention::Additive;
};

/// One spectrum per resolved bundle. A monopole field requires
/// `fixed_point` and a spherical or symmetric top (InvalidBundle otherwise);
/// a constant field is left out of the spectrum with a warning.
std::vector<Spectrum> spectra_for_job(const JobConfig& job, const RunOptions& run = {});

/// Per line, one string per section reference: the exact basis polynomial
/// for closed-form lines, the eigenvector coordinates in the block basis for
/// diagonalized lines.
using SectionTexts = std::vector<std::vector<std::string>>;

SectionTexts eigensection_texts(const JobConfig& job, const Spectrum& spectrum, const RunOptions& run = {});

}  // namespace rigrot
