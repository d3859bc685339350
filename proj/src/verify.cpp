#include "rigrot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "rigrot/block_kernels.hpp"
#include "rigrot/classical_em.hpp"
#include "rigrot/geometry.hpp"
#include "rigrot/inertia.hpp"
#include "rigrot/polyalg.hpp"
#include "rigrot/spectra.hpp"

namespace rigrot {

namespace {

using Failure = std::optional<std::string>;

std::string fail_at(const std::string& what, int p, int q) {
  std::ostringstream out;
  out << what << " on H^{" << p << "," << q << "}";
  return out.str();
}

/// Sorted energies, each repeated by its multiplicity.
std::vector<double> expand(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& line : s.lines) out.insert(out.end(), static_cast<std::size_t>(line.multiplicity), line.energy);
  std::sort(out.begin(), out.end());
  return out;
}

Failure compare_expanded(const Spectrum& a, const Spectrum& b, double rel) {
  const auto ea = expand(a), eb = expand(b);
  if (ea.size() != eb.size()) {
    return "dimension mismatch " + std::to_string(ea.size()) + " vs " + std::to_string(eb.size());
  }
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (std::abs(ea[k] - eb[k]) > rel * std::max(1.0, std::abs(ea[k]))) {
      std::ostringstream out;
      out << std::setprecision(17) << "energy " << ea[k] << " vs " << eb[k];
      return out.str();
    }
  }
  return std::nullopt;
}

SpectrumOptions spectrum_options(const VerifyOptions& v) {
  SpectrumOptions o;
  o.j_max = v.j_max;
  o.parallel = v.parallel;
  return o;
}

Failure check_commutators(const VerifyOptions&) {
  for (int d = 0; d <= 8; ++d) {
    for (int p = d; p >= 0; --p) {
      const BidegreeSpace space = harmonic_basis(p, d - p);
      const ExactMatrix m1 = generator_matrix(1, space).matrix;
      const ExactMatrix m2 = generator_matrix(2, space).matrix;
      const ExactMatrix m3 = generator_matrix(3, space).matrix;
      if (!(commutator(m1, m2) == m3) || !(commutator(m2, m3) == m1) || !(commutator(m3, m1) == m2)) {
        return fail_at("[M_a, M_b] != eps_abc M_c", p, d - p);
      }
    }
  }
  return std::nullopt;
}

Failure check_casimir(const VerifyOptions& v) {
  for (int d = 0; d <= 8; ++d) {
    for (int p = d; p >= 0; --p) {
      const BidegreeSpace space = harmonic_basis(p, d - p);
      ExactMatrix c = casimir_matrix(space).matrix;
      if (v.fault == Fault::CasimirSign) c = -c;
      ComplexRational value;
      if (!c.is_scalar(&value)) return fail_at("Casimir is not scalar", p, d - p);
      const Rational expected = make_rational(d * (d + 2), 4);
      if (!value.is_real() || value.re != expected || sgn(value.re) < 0) {
        return fail_at("Casimir = " + to_string(value) + ", expected " + to_string(expected), p, d - p);
      }
    }
  }
  return std::nullopt;
}

Failure check_weights(const VerifyOptions&) {
  for (int d = 0; d <= 8; ++d) {
    int total = 0;
    for (int p = d; p >= 0; --p) {
      const BidegreeSpace space = harmonic_basis(p, d - p);
      if (space.dimension() != d + 1) return fail_at("dimension != p+q+1", p, d - p);
      total += space.dimension();
      const ExactMatrix l3 = angular_momentum_z(space).matrix;
      if (!l3.is_diagonal()) return fail_at("i M_3 not diagonal in the weight basis", p, d - p);
      for (int k = 0; k <= d; ++k) {
        const ComplexRational expected(make_rational(2 * k - d, 2));
        if (!(l3(k, k) == expected)) return fail_at("weights are not -j..j", p, d - p);
      }
    }
    if (total != (d + 1) * (d + 1)) return "sum of dimensions at degree " + std::to_string(d) + " != (d+1)^2";
  }
  return std::nullopt;
}

Failure check_parity(const VerifyOptions& v) {
  for (int d = 0; d <= v.j_max.twice; ++d) {
    const BundleKind host = bundle_for_degree(d);
    if (!parity_projects(d, host) || parity_projects(d, host == BundleKind::Plus ? BundleKind::Minus : BundleKind::Plus)) {
      return "degree " + std::to_string(d) + " projects on both or neither bundle";
    }
    for (int p = d; p >= 0; --p) {
      const BidegreeSpace space = harmonic_basis(p, d - p);
      for (const auto& f : space.basis) {
        const Poly4 expected = d % 2 == 0 ? f : f * ComplexRational(-1);
        if (!(antipodal(f) == expected)) return fail_at("antipodal parity differs from (-1)^d", p, d - p);
      }
    }
  }
  return std::nullopt;
}

Failure check_spherical(const VerifyOptions& v) {
  const SpectrumOptions o = spectrum_options(v);
  for (BundleKind b : {BundleKind::Plus, BundleKind::Minus}) {
    const Spectrum closed = spherical_spectrum(1, b, o);
    for (const auto& line : closed.lines) {
      const Rational expected = make_rational(line.j.twice * (line.j.twice + 2), 8);
      if (!line.exact_energy || *line.exact_energy != expected) return "E_j != j(j+1)/2 at j = " + to_string(line.j);
      if (line.multiplicity != (line.j.twice + 1) * (line.j.twice + 1)) return "multiplicity != (2j+1)^2";
    }
    if (auto f = compare_expanded(closed, diagonalized_spectrum(1, 1, 1, b, o), 1e-10)) return f;
  }
  return std::nullopt;
}

Failure check_half_integer(const VerifyOptions& v) {
  const Spectrum minus = spherical_spectrum(1, BundleKind::Minus, spectrum_options(v));
  for (const auto& line : minus.lines) {
    if (line.j.is_integer()) return "integer j = " + to_string(line.j) + " on the non-trivial bundle";
  }
  if (v.j_max.twice >= 1) {
    if (minus.lines.empty() || minus.lines.front().j.twice != 1) return "lowest line is not j = 1/2";
    if (*minus.lines.front().exact_energy != make_rational(3, 8) || minus.lines.front().multiplicity != 4) {
      return "E_1/2 != 3/8 with multiplicity 4";
    }
  }
  const Spectrum plus = spherical_spectrum(1, BundleKind::Plus, spectrum_options(v));
  for (const auto& line : plus.lines) {
    if (!line.j.is_integer()) return "half-integer j on the trivial bundle";
  }
  return std::nullopt;
}

Failure check_symmetric(const VerifyOptions& v) {
  const SpectrumOptions o = spectrum_options(v);
  const Rational pair = 2, axis = 1;
  for (BundleKind b : {BundleKind::Plus, BundleKind::Minus}) {
    const Spectrum closed = symmetric_spectrum(pair, axis, b, o);
    for (const auto& line : closed.lines) {
      const int expected = line.l->twice == 0 ? line.j.twice + 1 : 2 * (line.j.twice + 1);
      if (line.multiplicity != expected) return "symmetric multiplicity at j = " + to_string(line.j);
    }
    if (auto f = compare_expanded(closed, diagonalized_spectrum(pair, pair, axis, b, o), 1e-10)) return f;

    const auto exact = degeneracy_groups(closed);
    const auto approx = degeneracy_groups(closed, 1e-12);
    if (exact.size() != approx.size()) return "exact and floating degeneracy groups differ";
    for (std::size_t k = 0; k < exact.size(); ++k) {
      if (!exact[k].exact_energy || exact[k].multiplicity != approx[k].multiplicity) {
        return "exact and floating degeneracy groups differ";
      }
    }
  }
  return std::nullopt;
}

Failure check_asymmetric_triad(const VerifyOptions& v) {
  SpectrumOptions o = spectrum_options(v);
  o.j_max = HalfInteger::integer(1);
  const std::vector<BlockResult> blocks = diagonalize_degree(2, 1, 2, 3, o);
  const std::vector<Rational> expected{make_rational(5, 12), make_rational(2, 3), make_rational(3, 4)};
  for (const auto& block : blocks) {
    if (block.eigen.exact.size() != 3) return fail_at("block is not 3-dimensional", block.key.p, block.key.q);
    for (std::size_t k = 0; k < 3; ++k) {
      if (!block.eigen.exact[k] || *block.eigen.exact[k] != expected[k]) {
        return fail_at("eigenvalues are not {5/12, 2/3, 3/4}", block.key.p, block.key.q);
      }
    }
  }
  return std::nullopt;
}

Failure check_asymmetric_oracle(const VerifyOptions& v) {
  const Spectrum s = diagonalized_spectrum(1, 2, 3, BundleKind::Plus, spectrum_options(v));
  const Spectrum m = diagonalized_spectrum(1, 2, 3, BundleKind::Minus, spectrum_options(v));
  for (int t = 0; t <= v.j_max.twice; ++t) {
    std::vector<double> ours;
    for (const Spectrum* sp : {&s, &m}) {
      for (const auto& line : sp->lines) {
        if (line.j.twice != t) continue;
        for (int k = 0; k < line.multiplicity / (t + 1); ++k) ours.push_back(line.energy);
      }
    }
    std::sort(ours.begin(), ours.end());
    const std::vector<double> oracle = ladder_oracle_energies(1, 2, 3, 1, t);
    if (ours.size() != oracle.size()) return "level count differs at 2j = " + std::to_string(t);
    for (std::size_t k = 0; k < ours.size(); ++k) {
      if (std::abs(ours[k] - oracle[k]) > 1e-10 * std::max(1.0, std::abs(oracle[k]))) {
        return "ladder oracle disagrees at 2j = " + std::to_string(t);
      }
    }
  }
  return std::nullopt;
}

Failure check_curvature(const VerifyOptions& v) {
  std::mt19937_64 rng(v.seed);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  const auto rel_close = [](double a, double b) { return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)); };
  for (int trial = 0; trial < 1000; ++trial) {
    const double i1 = u(rng), i2 = u(rng), i3 = u(rng), hbar = u(rng);
    if (!rel_close(asymmetric_curvature(i1, i2, i3, hbar), scalar_curvature_oracle(i1, i2, i3, hbar))) {
      return "asymmetric closed form disagrees with the Koszul oracle";
    }
    if (!rel_close(symmetric_curvature(i1, i2, hbar), scalar_curvature_oracle(i2, i1, i1, hbar))) {
      return "symmetric closed form disagrees with the Koszul oracle";
    }
    if (!rel_close(spherical_curvature(i1, hbar), scalar_curvature_oracle(i1, i1, i1, hbar))) {
      return "spherical closed form disagrees with the Koszul oracle";
    }
    if (!rel_close(degenerate_curvature(i1, hbar), degenerate_curvature_oracle(i1, hbar, i2))) {
      return "degenerate closed form disagrees with the O'Neill oracle";
    }
  }
  for (int n = 1; n <= 20; ++n) {
    const Rational i(n), h(1);
    if (asymmetric_curvature(i, i, i, h) != spherical_curvature(i, h)) return "spherical limit is not 3 hbar/(2I)";
  }
  return std::nullopt;
}

Failure check_degenerate(const VerifyOptions&) {
  const Rational transverse = 2;
  for (int ell = 0; ell <= 8; ++ell) {
    const HarmonicSpaceR3 space = harmonic_basis_r3(ell);
    if (space.dimension() != 2 * ell + 1) return "dim H_l != 2l+1 at l = " + std::to_string(ell);
    const OperatorMatrix h = hamiltonian_matrix(space, transverse, 1, 0);
    const EigenDecomposition eig = diagonalize(h.matrix, gram_matrix(space));
    const Rational expected = make_rational(ell * (ell + 1), 4);
    for (const auto& e : eig.exact) {
      if (!e || *e != expected) return "S^2 eigenvalue differs from l(l+1)/(2I) at l = " + std::to_string(ell);
    }
  }
  SpectrumOptions o;
  o.j_max = HalfInteger::integer(8);
  const Spectrum s = degenerate_spectrum(transverse, o);
  for (const auto& line : s.lines) {
    const int ell = line.j.twice / 2;
    if (line.multiplicity != 2 * ell + 1) return "degenerate multiplicity != 2l+1";
    if (line.multiplicity == (2 * ell + 1) * (2 * ell + 1) && ell > 0) return "degenerate multiplicity is (2j+1)^2";
  }
  return std::nullopt;
}

Failure check_monopole(const VerifyOptions& v) {
  const SpectrumOptions o = spectrum_options(v);
  const Rational pair = 2, axis = 1;
  for (BundleKind b : {BundleKind::Plus, BundleKind::Minus}) {
    const Spectrum free = symmetric_spectrum(pair, axis, b, o);
    const Spectrum zero = monopole_spectrum(pair, axis, b, 0, 3, o);
    for (const auto& line : zero.lines) {
      const auto match = std::find_if(free.lines.begin(), free.lines.end(), [&](const SpectralLine& f) {
        return f.j == line.j && f.l && *f.l == line.l->abs();
      });
      if (match == free.lines.end() || *match->exact_energy != *line.exact_energy) {
        return "nu = 0 differs from the free spectrum at j = " + to_string(line.j);
      }
    }
    const Rational nu = make_rational(3, 7), q = make_rational(5, 2);
    const Spectrum charged = monopole_spectrum(pair, axis, b, nu, q, o);
    for (const auto& line : charged.lines) {
      if (line.l->twice <= 0) continue;
      const auto mirror = std::find_if(charged.lines.begin(), charged.lines.end(), [&](const SpectralLine& f) {
        return f.j == line.j && *f.l == -*line.l;
      });
      const Rational l = make_rational(line.l->twice, 2);
      if (mirror == charged.lines.end() || *mirror->exact_energy - *line.exact_energy != 2 * nu * q * l / axis) {
        return "l -> -l splitting != 2 nu |q| l / I_axis at j = " + to_string(line.j);
      }
    }
  }
  return std::nullopt;
}

Vec3 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng), g(rng)};
}

Failure check_classical(const VerifyOptions& v) {
  std::mt19937_64 rng(v.seed + 1);
  std::uniform_real_distribution<double> mass(0.5, 3.0);
  std::uniform_int_distribution<int> count(3, 6);
  const double tol = 1e-12;
  for (int trial = 0; trial < 200; ++trial) {
    ParticleSystem sys;
    const int n = count(rng);
    const double k = mass(rng) - 1.5;
    for (int i = 0; i < n; ++i) {
      sys.masses.push_back(mass(rng));
      sys.charges.push_back(k * sys.masses.back());
      sys.positions.push_back(random_vec(rng));
    }
    const RigidConfiguration cfg = canonicalize(sys);

    std::vector<Vec3> vel, wel;
    for (int i = 0; i < n; ++i) {
      vel.push_back(random_vec(rng));
      wel.push_back(random_vec(rng));
    }
    const SplitVector sv = split_velocity(cfg, vel);
    const SplitVector sw = split_velocity(cfg, wel);
    const auto back = sv.recombine();
    for (int i = 0; i < n; ++i) {
      if ((back[static_cast<std::size_t>(i)] - vel[static_cast<std::size_t>(i)]).norm() > tol) return "split_velocity does not recombine";
    }
    const std::vector<Vec3> cen_v(static_cast<std::size_t>(n), sv.center);
    if (std::abs(weighted_inner(cfg, cen_v, sw.relative)) > tol) return "center and relative parts are not orthogonal";

    const Vec3 omega = random_vec(rng);
    if ((angular_velocity(cfg, rigid_velocities(cfg, omega)) - omega).norm() > tol) {
      return "angular velocity round trip failed";
    }

    const PatternField field = PatternField::uniform(random_vec(rng), random_vec(rng));
    const RigidTangent a{mass(rng), random_vec(rng), random_vec(rng)};
    const RigidTangent b{mass(rng), random_vec(rng), random_vec(rng)};
    const SplitFieldValue split = split_field(sys, cfg, field, a, b);
    if (std::abs(split.mixed) > tol) return "mixed component does not vanish for q_i = k m_i";
    if (std::abs(split.total() - unsplit_field(sys, cfg, field, a, b)) > tol) return "split components do not add up";
    if (!decoupling_check(sys, field).decoupled) return "decoupling check rejects q_i = k m_i";

    ParticleSystem dipole;
    const double m1 = mass(rng), m2 = mass(rng), q1 = mass(rng);
    dipole.masses = {m1, m2};
    dipole.charges = {q1, -q1};
    dipole.positions = {random_vec(rng), random_vec(rng)};
    const RigidConfiguration dcfg = canonicalize(dipole);
    const SplitFieldValue d = split_field(dipole, dcfg, field, a, b);
    const Vec3 v1 = a.omega.cross(dcfg.relatives[0]);
    const Vec3 w1 = b.omega.cross(dcfg.relatives[0]);
    const double expected = 2.0 * q1 * (m2 - m1) / (m2 * m2) * field.b(Vec3::Zero()).dot(v1.cross(w1));
    if (std::abs(d.cen) > tol) return "dipole center component is not zero";
    if (std::abs(d.rot - expected) > tol) return "dipole rotational component differs from 2 q1 (m2-m1)/m2^2 B.(v x w)";
  }
  return std::nullopt;
}

Failure check_parallel(const VerifyOptions& v) {
  RotorParameters params{1, 2, 3, 1, 0, 4};
  const std::vector<BlockKey> keys = blocks_up_to(std::min(v.j_max.twice, 8));
  const auto serial = diagonalize_blocks_serial(keys, params);
  const auto parallel = diagonalize_blocks_parallel(keys, params);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (!(serial[k].key == parallel[k].key) || serial[k].eigen.values != parallel[k].eigen.values ||
        serial[k].eigen.exact != parallel[k].eigen.exact) {
      return fail_at("serial and parallel kernels differ", keys[k].p, keys[k].q);
    }
  }
  return std::nullopt;
}

}  // namespace

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::vector<double> ladder_oracle_energies(double i1, double i2, double i3, double hbar, int twice_j) {
  const int n = twice_j + 1;
  const double j = 0.5 * twice_j;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = -j + k;
    jz(k, k) = m;
    if (k + 1 < n) jp(k + 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Eigen::MatrixXcd jm = jp.adjoint();
  const Eigen::MatrixXcd jx = 0.5 * (jp + jm);
  const Eigen::MatrixXcd jy = std::complex<double>(0.0, -0.5) * (jp - jm);
  const Eigen::MatrixXcd h = 0.5 * hbar * (jx * jx / i1 + jy * jy / i2 + jz * jz / i3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.j_max.twice < 0 || options.j_max > kJMaxCap) {
    throw Error(ErrorCode::InvalidArgument, "j_max must lie in [0, 25]");
  }
  const std::vector<std::pair<const char*, Failure (*)(const VerifyOptions&)>> suite{
      {"su(2) exact commutators", check_commutators},
      {"Casimir positivity", check_casimir},
      {"weights and dimensions", check_weights},
      {"parity selection", check_parity},
      {"spherical closed form vs diagonalization", check_spherical},
      {"half-integer branch", check_half_integer},
      {"symmetric closed form vs diagonalization", check_symmetric},
      {"asymmetric j=1 triad", check_asymmetric_triad},
      {"asymmetric vs ladder oracle", check_asymmetric_oracle},
      {"scalar curvature oracle sweep", check_curvature},
      {"degenerate spectrum on S^2", check_degenerate},
      {"monopole l-symmetry", check_monopole},
      {"classical splitting", check_classical},
      {"serial vs parallel kernels", check_parallel},
  };

  VerifyReport report;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, fn] : suite) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Failure f = fn(options);
      r.passed = !f;
      if (f) r.detail = *f;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rigrot
