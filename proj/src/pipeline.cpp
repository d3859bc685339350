#include "rigrot/pipeline.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace rigrot {

Classification classify_job(const JobConfig& job) {
  Classification c;
  c.config = canonicalize(job.particles, job.tolerances);
  c.momenta = principal_momenta(c.config, job.tolerances);
  c.curvature = scalar_curvature(c.momenta, job.hbar.get_d());
  c.structures = admissible_structures(c.config.degeneracy);
  return c;
}

Rational momentum_rational(double x, double rel_tol) {
  const Rational r = approximate_rational(x, 1000000);
  if (std::abs(r.get_d() - x) <= rel_tol * std::abs(x)) return r;
  return to_rational(x);
}

std::vector<BundleKind> resolve_bundles(BundleRequest request, DegeneracyClass degeneracy) {
  const bool degenerate = is_degenerate(degeneracy);
  switch (request) {
    case BundleRequest::Auto:
      if (degenerate) return {BundleKind::Plus};
      return {BundleKind::Plus, BundleKind::Minus};
    case BundleRequest::Trivial:
      return {BundleKind::Plus};
    case BundleRequest::Nontrivial:
    case BundleRequest::Both:
      if (degenerate) {
        throw Error(ErrorCode::InvalidBundle,
                    "a collinear body admits only the trivial bundle");
      }
      if (request == BundleRequest::Nontrivial) return {BundleKind::Minus};
      return {BundleKind::Plus, BundleKind::Minus};
  }
  return {BundleKind::Plus};
}

std::vector<Spectrum> spectra_for_job(const JobConfig& job, const RunOptions& run) {
  const Classification c = classify_job(job);
  const std::vector<BundleKind> bundles = resolve_bundles(job.bundle, c.config.degeneracy);

  SpectrumOptions opts;
  opts.hbar = job.hbar;
  opts.k = job.k;
  opts.j_max = job.j_max;
  opts.convention = run.convention;
  opts.spec_tol = job.tolerances.spec;
  opts.parallel = run.parallel;

  const PrincipalMomenta& pm = c.momenta;
  const double rel = job.tolerances.rel;

  if (job.field.kind == FieldSpec::Kind::Monopole) {
    if (!run.fixed_point) {
      throw Error(ErrorCode::InvalidBundle,
                  "the monopole field requires --fixed-point (rotational degrees of freedom only)");
    }
    if (pm.top == TopClass::Degenerate || pm.top == TopClass::Asymmetric) {
      throw Error(ErrorCode::InvalidBundle, std::string("the monopole spectrum needs a spherical or symmetric top, got ") +
                                                to_string(pm.top));
    }
  }

  std::vector<Spectrum> out;
  for (BundleKind bundle : bundles) {
    Spectrum s;
    if (job.field.kind == FieldSpec::Kind::Monopole) {
      const Rational pair = momentum_rational(pm.top == TopClass::Spherical ? pm.common_momentum() : pm.pair_momentum, rel);
      const Rational axis = pm.top == TopClass::Spherical ? pair : momentum_rational(pm.axis_momentum, rel);
      s = monopole_spectrum(pair, axis, bundle, job.field.nu, job.field.q_norm, opts);
    } else {
      switch (pm.top) {
        case TopClass::Spherical:
          s = spherical_spectrum(momentum_rational(pm.common_momentum(), rel), bundle, opts);
          break;
        case TopClass::Symmetric:
          s = symmetric_spectrum(momentum_rational(pm.pair_momentum, rel), momentum_rational(pm.axis_momentum, rel),
                                 bundle, opts);
          break;
        case TopClass::Asymmetric:
          s = asymmetric_spectrum(momentum_rational(pm.values[0], rel), momentum_rational(pm.values[1], rel),
                                  momentum_rational(pm.values[2], rel), bundle, opts, rel);
          break;
        case TopClass::Degenerate:
          s = degenerate_spectrum(momentum_rational(pm.common_momentum(), rel), opts);
          break;
      }
    }
    if (job.field.kind == FieldSpec::Kind::Constant) {
      s.meta.warnings.push_back("constant field is not included in the rotational spectrum");
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rigrot

namespace rigrot {

namespace {

std::string format_coordinates(const Eigen::VectorXcd& v) {
  std::ostringstream out;
  out << std::setprecision(6) << "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out << ", ";
    const double re = std::abs(v[k].real()) < 1e-12 ? 0.0 : v[k].real();
    const double im = std::abs(v[k].imag()) < 1e-12 ? 0.0 : v[k].imag();
    out << re;
    if (im != 0.0) out << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  out << ")";
  return out.str();
}

}  // namespace

SectionTexts eigensection_texts(const JobConfig& job, const Spectrum& spectrum, const RunOptions& run) {
  std::map<std::pair<int, int>, BidegreeSpace> spaces;
  std::map<int, HarmonicSpaceR3> spaces_r3;
  std::map<int, std::vector<BlockResult>> blocks;

  const auto bidegree = [&](int p, int q) -> const BidegreeSpace& {
    auto it = spaces.find({p, q});
    if (it == spaces.end()) it = spaces.emplace(std::pair{p, q}, harmonic_basis(p, q)).first;
    return it->second;
  };

  SectionTexts out;
  for (const SpectralLine& line : spectrum.lines) {
    std::vector<std::string> texts;
    for (const SectionRef& ref : line.sections) {
      if (ref.space == SpaceKind::HarmonicR3) {
        auto it = spaces_r3.find(ref.p);
        if (it == spaces_r3.end()) it = spaces_r3.emplace(ref.p, harmonic_basis_r3(ref.p)).first;
        texts.push_back(to_string(it->second.basis.at(static_cast<std::size_t>(ref.index))));
      } else if (line.source == LineSource::ClosedForm) {
        texts.push_back(to_string(bidegree(ref.p, ref.q).basis.at(static_cast<std::size_t>(ref.index))));
      } else {
        const int degree = ref.p + ref.q;
        auto it = blocks.find(degree);
        if (it == blocks.end()) {
          const Classification c = classify_job(job);
          const double rel = job.tolerances.rel;
          SpectrumOptions opts;
          opts.hbar = job.hbar;
          opts.k = job.k;
          opts.convention = run.convention;
          opts.parallel = run.parallel;
          it = blocks
                   .emplace(degree, diagonalize_degree(degree, momentum_rational(c.momenta.values[0], rel),
                                                       momentum_rational(c.momenta.values[1], rel),
                                                       momentum_rational(c.momenta.values[2], rel), opts))
                   .first;
        }
        const BlockResult& block = it->second.at(static_cast<std::size_t>(degree - ref.p));
        texts.push_back(format_coordinates(block.eigen.vectors.col(ref.index)));
      }
    }
    out.push_back(std::move(texts));
  }
  return out;
}

}  // namespace rigrot
