#include "rigrot/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Geometry>

namespace rigrot {

namespace {

void check_options(const SpectrumOptions& options) {
  if (options.j_max.twice < 0 || options.j_max > kJMaxCap) {
    throw Error(ErrorCode::InvalidArgument, "j_max must lie in [0, 25]");
  }
  if (sgn(options.hbar) <= 0) throw Error(ErrorCode::InvalidArgument, "hbar must be positive");
}

void check_positive(const Rational& x, const char* what) {
  if (sgn(x) <= 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

/// Twice the admissible j values on a bundle, up to j_max.
std::vector<int> twice_j_values(BundleKind bundle, HalfInteger j_max) {
  std::vector<int> out;
  for (int t = bundle == BundleKind::Plus ? 0 : 1; t <= j_max.twice; t += 2) out.push_back(t);
  return out;
}

/// j (j + 1) for j = t / 2.
Rational casimir_value(int twice_j) { return make_rational(twice_j * (twice_j + 2), 4); }

SpectralLine make_line(const Rational& energy, int twice_j, std::optional<int> twice_l,
                       int multiplicity, BundleKind bundle) {
  SpectralLine line;
  line.exact_energy = energy;
  line.energy = energy.get_d();
  line.j = HalfInteger::from_twice(twice_j);
  if (twice_l) line.l = HalfInteger::from_twice(*twice_l);
  line.multiplicity = multiplicity;
  line.bundle = bundle;
  line.source = LineSource::ClosedForm;
  return line;
}

// Index of the basis element of H^{p,q} (p + q = twice_j) with weight l.
int weight_index(int twice_j, int twice_l) { return (twice_j + twice_l) / 2; }

void add_weight_sections(SpectralLine& line, int twice_j, int twice_l) {
  for (int p = twice_j; p >= 0; --p) {
    line.sections.push_back({SpaceKind::Bidegree, p, twice_j - p, weight_index(twice_j, twice_l)});
  }
}

SpectrumMeta make_meta(TopClass top, std::array<double, 3> momenta, BundleKind bundle,
                       const SpectrumOptions& options) {
  SpectrumMeta meta;
  meta.top = top;
  meta.momenta = momenta;
  meta.bundle = bundle;
  meta.k = options.k.get_d();
  meta.hbar = options.hbar.get_d();
  meta.j_max = options.j_max;
  return meta;
}

bool close(double a, double b, double rel_tol, double scale) {
  return std::abs(a - b) <= rel_tol * std::max({std::abs(a), std::abs(b), scale});
}

}  // namespace

const char* to_string(LineSource s) {
  return s == LineSource::ClosedForm ? "closed-form" : "diagonalized";
}

int Spectrum::total_dimension() const {
  return std::accumulate(lines.begin(), lines.end(), 0,
                         [](int acc, const SpectralLine& l) { return acc + l.multiplicity; });
}

void Spectrum::sort() {
  std::stable_sort(lines.begin(), lines.end(), [](const SpectralLine& a, const SpectralLine& b) {
    if (a.exact_energy && b.exact_energy && *a.exact_energy != *b.exact_energy) {
      return *a.exact_energy < *b.exact_energy;
    }
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.j != b.j) return a.j < b.j;
    const int la = a.l ? a.l->twice : 0;
    const int lb = b.l ? b.l->twice : 0;
    return la < lb;
  });
}

Rational curvature_shift(const Rational& k, const Rational& rho, CurvatureConvention c) {
  if (c == CurvatureConvention::Additive) return Rational(k * rho);
  return Rational(-k * rho / 2);
}

Spectrum j_squared_spectrum(BundleKind bundle, const SpectrumOptions& options) {
  check_options(options);
  Spectrum s;
  s.meta = make_meta(TopClass::Spherical, {}, bundle, options);
  for (int t : twice_j_values(bundle, options.j_max)) {
    const Rational value = options.hbar * options.hbar * casimir_value(t);
    s.lines.push_back(make_line(value, t, std::nullopt, (t + 1) * (t + 1), bundle));
  }
  s.sort();
  return s;
}

Spectrum spherical_spectrum(const Rational& inertia, BundleKind bundle,
                            const SpectrumOptions& options) {
  check_options(options);
  check_positive(inertia, "moment of inertia");
  const Rational rho = spherical_curvature(inertia, options.hbar);
  const Rational shift = curvature_shift(options.k, rho, options.convention);
  const double i = inertia.get_d();

  Spectrum s;
  s.meta = make_meta(TopClass::Spherical, {i, i, i}, bundle, options);
  for (int t : twice_j_values(bundle, options.j_max)) {
    const Rational e = options.hbar / (2 * inertia) * casimir_value(t) + shift;
    SpectralLine line = make_line(e, t, std::nullopt, (t + 1) * (t + 1), bundle);
    for (int p = t; p >= 0; --p)
      for (int idx = 0; idx <= t; ++idx) line.sections.push_back({SpaceKind::Bidegree, p, t - p, idx});
    s.lines.push_back(std::move(line));
  }
  s.sort();
  return s;
}

Spectrum symmetric_spectrum(const Rational& pair, const Rational& axis, BundleKind bundle,
                            const SpectrumOptions& options) {
  if (pair == axis) return spherical_spectrum(pair, bundle, options);
  check_options(options);
  check_positive(pair, "pair momentum");
  check_positive(axis, "axis momentum");
  const Rational rho = symmetric_curvature(pair, axis, options.hbar);
  const Rational shift = curvature_shift(options.k, rho, options.convention);
  const Rational anisotropy = options.hbar / 2 * (1 / axis - 1 / pair);

  Spectrum s;
  const double ip = pair.get_d(), ia = axis.get_d();
  s.meta = make_meta(TopClass::Symmetric, {ia, ip, ip}, bundle, options);
  std::sort(s.meta.momenta.begin(), s.meta.momenta.end());
  for (int t : twice_j_values(bundle, options.j_max)) {
    for (int tl = t % 2; tl <= t; tl += 2) {
      const Rational l2 = make_rational(tl * tl, 4);
      const Rational e = options.hbar / (2 * pair) * casimir_value(t) + anisotropy * l2 + shift;
      const int mult = tl == 0 ? t + 1 : 2 * (t + 1);
      SpectralLine line = make_line(e, t, tl, mult, bundle);
      add_weight_sections(line, t, tl);
      if (tl != 0) add_weight_sections(line, t, -tl);
      s.lines.push_back(std::move(line));
    }
  }
  s.sort();
  return s;
}

std::vector<BlockResult> diagonalize_degree(int degree, const Rational& i1, const Rational& i2,
                                            const Rational& i3, const SpectrumOptions& options) {
  RotorParameters params{i1, i2, i3, options.hbar,
                         curvature_shift(options.k, asymmetric_curvature(i1, i2, i3, options.hbar),
                                         options.convention),
                         options.exact_degree_limit};
  std::vector<BlockKey> keys;
  for (int p = degree; p >= 0; --p) keys.push_back({p, degree - p});
  return options.parallel ? diagonalize_blocks_parallel(keys, params)
                          : diagonalize_blocks_serial(keys, params);
}

Spectrum diagonalized_spectrum(const Rational& i1, const Rational& i2, const Rational& i3,
                               BundleKind bundle, const SpectrumOptions& options) {
  check_options(options);
  check_positive(i1, "I1");
  check_positive(i2, "I2");
  check_positive(i3, "I3");

  const Rational rho = asymmetric_curvature(i1, i2, i3, options.hbar);
  RotorParameters params{i1, i2, i3, options.hbar, curvature_shift(options.k, rho, options.convention),
                         options.exact_degree_limit};
  const std::vector<BlockKey> keys = blocks_up_to(options.j_max.twice, bundle);
  const std::vector<BlockResult> blocks = options.parallel ? diagonalize_blocks_parallel(keys, params)
                                                           : diagonalize_blocks_serial(keys, params);

  Spectrum s;
  std::array<double, 3> momenta{i1.get_d(), i2.get_d(), i3.get_d()};
  std::sort(momenta.begin(), momenta.end());
  s.meta = make_meta(TopClass::Asymmetric, momenta, bundle, options);

  struct Entry {
    double value;
    std::optional<Rational> exact;
    SectionRef ref;
  };
  std::map<int, std::vector<Entry>> by_degree;
  for (const auto& block : blocks) {
    const auto& eig = block.eigen;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
      by_degree[block.key.degree()].push_back(
          {eig.values[k], eig.exact[k],
           {SpaceKind::Bidegree, block.key.p, block.key.q, static_cast<int>(k)}});
    }
  }

  for (auto& [t, entries] : by_degree) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.value < b.value; });
    const bool all_exact =
        std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.exact.has_value(); });
    double scale = 0.0;
    for (const auto& e : entries) scale = std::max(scale, std::abs(e.value));

    std::size_t start = 0;
    while (start < entries.size()) {
      std::size_t end = start + 1;
      while (end < entries.size()) {
        const bool same = all_exact ? *entries[end].exact == *entries[start].exact
                                    : close(entries[end].value, entries[start].value, options.spec_tol, scale);
        if (!same) break;
        ++end;
      }
      SpectralLine line;
      double sum = 0.0;
      for (std::size_t k = start; k < end; ++k) {
        sum += entries[k].value;
        line.sections.push_back(entries[k].ref);
      }
      line.energy = sum / static_cast<double>(end - start);
      if (all_exact) {
        line.exact_energy = entries[start].exact;
        line.energy = line.exact_energy->get_d();
      }
      line.j = HalfInteger::from_twice(t);
      line.multiplicity = static_cast<int>(end - start);
      line.bundle = bundle;
      line.source = LineSource::Diagonalized;
      s.lines.push_back(std::move(line));
      start = end;
    }
  }
  s.sort();
  return s;
}

Spectrum asymmetric_spectrum(const Rational& i1, const Rational& i2, const Rational& i3,
                             BundleKind bundle, const SpectrumOptions& options, double rel_tol) {
  std::array<Rational, 3> sorted{i1, i2, i3};
  std::sort(sorted.begin(), sorted.end());
  const std::array<double, 3> v{sorted[0].get_d(), sorted[1].get_d(), sorted[2].get_d()};
  const TopClass top = classify_top(v, DegeneracyClass::StronglyNonDegenerate, rel_tol);
  if (top == TopClass::Asymmetric) return diagonalized_spectrum(i1, i2, i3, bundle, options);

  Spectrum s;
  if (top == TopClass::Spherical) {
    s = spherical_spectrum(Rational((sorted[0] + sorted[1] + sorted[2]) / 3), bundle, options);
  } else if (std::abs(v[1] - v[0]) <= rel_tol * v[2]) {
    s = symmetric_spectrum(Rational((sorted[0] + sorted[1]) / 2), sorted[2], bundle, options);
  } else {
    s = symmetric_spectrum(Rational((sorted[1] + sorted[2]) / 2), sorted[0], bundle, options);
  }
  s.meta.warnings.push_back(std::string("momenta are not pairwise distinct; using the ") +
                            to_string(top) + " closed form");
  return s;
}

Spectrum degenerate_spectrum(const Rational& transverse, const SpectrumOptions& options) {
  check_options(options);
  check_positive(transverse, "transverse momentum");
  const Rational rho = degenerate_curvature(transverse, options.hbar);
  const Rational shift = curvature_shift(options.k, rho, options.convention);

  Spectrum s;
  const double i = transverse.get_d();
  s.meta = make_meta(TopClass::Degenerate, {0.0, i, i}, BundleKind::Plus, options);
  for (int ell = 0; 2 * ell <= options.j_max.twice; ++ell) {
    const Rational e = options.hbar / (2 * transverse) * Rational(ell * (ell + 1)) + shift;
    SpectralLine line = make_line(e, 2 * ell, std::nullopt, 2 * ell + 1, BundleKind::Plus);
    for (int idx = 0; idx < 2 * ell + 1; ++idx) line.sections.push_back({SpaceKind::HarmonicR3, ell, 0, idx});
    s.lines.push_back(std::move(line));
  }
  s.sort();
  return s;
}

Spectrum monopole_spectrum(const Rational& pair, const Rational& axis, BundleKind bundle,
                           const Rational& magnetic_charge, const Rational& charge_center_norm,
                           const SpectrumOptions& options) {
  check_options(options);
  check_positive(pair, "pair momentum");
  check_positive(axis, "axis momentum");
  if (sgn(magnetic_charge) < 0 || sgn(charge_center_norm) < 0) {
    throw Error(ErrorCode::InvalidArgument, "monopole charge and center norm must be non-negative");
  }
  const Rational rho = pair == axis ? spherical_curvature(pair, options.hbar)
                                    : symmetric_curvature(pair, axis, options.hbar);
  const Rational shift = curvature_shift(options.k, rho, options.convention);
  const Rational anisotropy = options.hbar / 2 * (1 / axis - 1 / pair);
  const Rational linear = magnetic_charge * charge_center_norm / axis;
  const Rational constant = magnetic_charge * magnetic_charge / options.hbar *
                            charge_center_norm * charge_center_norm / (2 * axis);

  Spectrum s;
  const double ip = pair.get_d(), ia = axis.get_d();
  s.meta = make_meta(pair == axis ? TopClass::Spherical : TopClass::Symmetric, {ia, ip, ip}, bundle,
                     options);
  std::sort(s.meta.momenta.begin(), s.meta.momenta.end());
  for (int t : twice_j_values(bundle, options.j_max)) {
    for (int tl = -t; tl <= t; tl += 2) {
      const Rational l = make_rational(tl, 2);
      const Rational e = options.hbar / (2 * pair) * casimir_value(t) + anisotropy * l * l -
                         linear * l + constant + shift;
      SpectralLine line = make_line(e, t, tl, t + 1, bundle);
      add_weight_sections(line, t, tl);
      s.lines.push_back(std::move(line));
    }
  }
  s.sort();
  return s;
}

std::vector<DegeneracyGroup> degeneracy_groups(const Spectrum& spectrum,
                                               std::optional<double> rel_tol) {
  const auto& lines = spectrum.lines;
  const bool exact = !rel_tol && std::all_of(lines.begin(), lines.end(),
                                             [](const SpectralLine& l) { return l.exact_energy.has_value(); });
  const double tol = rel_tol.value_or(1e-9);
  double scale = 0.0;
  for (const auto& l : lines) scale = std::max(scale, std::abs(l.energy));
  scale *= 1e-3;

  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (exact) return *lines[a].exact_energy < *lines[b].exact_energy;
    return lines[a].energy < lines[b].energy;
  });

  std::vector<DegeneracyGroup> groups;
  for (std::size_t idx : order) {
    const SpectralLine& line = lines[idx];
    bool merge = false;
    if (!groups.empty()) {
      const DegeneracyGroup& g = groups.back();
      merge = exact ? *g.exact_energy == *line.exact_energy
                    : close(g.energy, line.energy, tol, scale);
    }
    if (!merge) {
      groups.push_back({line.energy, exact ? line.exact_energy : std::nullopt, 0, {}});
    }
    groups.back().multiplicity += line.multiplicity;
    groups.back().lines.push_back(idx);
  }
  return groups;
}

double classical_momentum_map(const Vec3& omega, const RigidConfiguration& config,
                              std::span<const Vec3> relative_velocities, double hbar) {
  if (relative_velocities.size() != config.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected one velocity per particle");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    acc += config.masses[i] * omega.cross(config.relatives[i]).dot(relative_velocities[i]);
  }
  return acc / hbar;
}

}  // namespace rigrot
