#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigrot/block_kernels.hpp"
#include "rigrot/common.hpp"
#include "rigrot/geometry.hpp"
#include "rigrot/inertia.hpp"
#include "rigrot/polyalg.hpp"
#include "rigrot/quantum_structures.hpp"
#include "rigrot/rational.hpp"

namespace rigrot {

enum class LineSource { ClosedForm, Diagonalized };

const char* to_string(LineSource s);  // "closed-form" / "diagonalized"

/// Reference to an eigensection: element `index` of the basis of H^{p,q}
/// (closed forms), or eigenvector column `index` of that block (diagonalized
/// lines). For collinear bodies the space is H_l on R^3 with p = l.
struct SectionRef {
  SpaceKind space = SpaceKind::Bidegree;
  int p = 0;
  int q = 0;
  int index = 0;

  friend bool operator==(const SectionRef&, const SectionRef&) = default;
};

struct SpectralLine {
  double energy = 0.0;
  std::optional<Rational> exact_energy;
  HalfInteger j;
  std::optional<HalfInteger> l;  // |l| for symmetric tops, signed for the monopole
  int multiplicity = 1;
  BundleKind bundle = BundleKind::Plus;
  LineSource source = LineSource::ClosedForm;
  std::vector<SectionRef> sections;

  friend bool operator==(const SpectralLine&, const SpectralLine&) = default;
};

struct SpectrumMeta {
  TopClass top = TopClass::Spherical;
  std::array<double, 3> momenta{};
  BundleKind bundle = BundleKind::Plus;
  double k = 0.0;
  double hbar = 1.0;
  HalfInteger j_max;
  std::vector<std::string> warnings;

  friend bool operator==(const SpectrumMeta&, const SpectrumMeta&) = default;
};

struct Spectrum {
  std::vector<SpectralLine> lines;
  SpectrumMeta meta;

  int total_dimension() const;
  /// Sorts by energy, then j, then l.
  void sort();

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// How the free curvature coupling k enters the energy.
enum class CurvatureConvention {
  Additive,         // + k * rho on every level
  OperatorFormula,  // - k * rho / 2, from H = -(Delta + k rho) / 2
};

Rational curvature_shift(const Rational& k, const Rational& rho, CurvatureConvention c);

struct SpectrumOptions {
  Rational hbar = 1;
  Rational k = 0;
  HalfInteger j_max = HalfInteger::integer(6);
  CurvatureConvention convention = CurvatureConvention::Additive;
  double spec_tol = 1e-9;
  bool parallel = true;
  int exact_degree_limit = 4;
};

/// Largest admissible j_max (matrix blocks stay at most 51 x 51).
inline constexpr HalfInteger kJMaxCap = HalfInteger::integer(25);

/// Spectrum of the squared angular momentum: hbar^2 j(j+1), multiplicity (2j+1)^2.
Spectrum j_squared_spectrum(BundleKind bundle, const SpectrumOptions& options = {});

Spectrum spherical_spectrum(const Rational& inertia, BundleKind bundle,
                            const SpectrumOptions& options = {});

/// Lines per (j, |l|); multiplicity 2j+1 at l = 0 and 2(2j+1) otherwise.
/// Equal momenta delegate to spherical_spectrum.
Spectrum symmetric_spectrum(const Rational& pair, const Rational& axis, BundleKind bundle,
                            const SpectrumOptions& options = {});

/// Brute force: diagonalizes the rotor Hamiltonian on every H^{p,q} with
/// p + q = 2j and merges eigenvalues of equal j. Accepts any momenta.
Spectrum diagonalized_spectrum(const Rational& i1, const Rational& i2, const Rational& i3,
                               BundleKind bundle, const SpectrumOptions& options = {});

/// Diagonalized spectrum for pairwise-distinct momenta; near-ties (within
/// rel_tol) route to the symmetric or spherical closed form with a warning.
Spectrum asymmetric_spectrum(const Rational& i1, const Rational& i2, const Rational& i3,
                             BundleKind bundle, const SpectrumOptions& options = {},
                             double rel_tol = 1e-9);

/// Collinear body: hbar/(2I) l(l+1) with multiplicity 2l+1, l = 0 .. floor(j_max).
Spectrum degenerate_spectrum(const Rational& transverse, const SpectrumOptions& options = {});

/// Symmetric top with a monopole at the fixed point; one line per (j, l).
Spectrum monopole_spectrum(const Rational& pair, const Rational& axis, BundleKind bundle,
                           const Rational& magnetic_charge, const Rational& charge_center_norm,
                           const SpectrumOptions& options = {});

/// Lines of equal energy across different quantum numbers.
struct DegeneracyGroup {
  double energy = 0.0;
  std::optional<Rational> exact_energy;
  int multiplicity = 0;
  std::vector<std::size_t> lines;
};

/// Groups lines with equal energy: exactly when every line carries an exact
/// energy and `rel_tol` is empty, otherwise within rel_tol (relative).
std::vector<DegeneracyGroup> degeneracy_groups(const Spectrum& spectrum,
                                               std::optional<double> rel_tol = std::nullopt);

/// Classical momentum map J(omega) = (1/hbar) sum_i m_i (omega x r_i) . v_i.
double classical_momentum_map(const Vec3& omega, const RigidConfiguration& config,
                              std::span<const Vec3> relative_velocities, double hbar = 1.0);

/// Eigen-decompositions of the rotor Hamiltonian on every H^{p,q} with
/// p + q = degree.
std::vector<BlockResult> diagonalize_degree(int degree, const Rational& i1, const Rational& i2,
                                            const Rational& i3, const SpectrumOptions& options);

}  // namespace rigrot
