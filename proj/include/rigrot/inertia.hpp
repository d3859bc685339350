#pragma once

#include <array>
#include <optional>

#include "rigrot/common.hpp"
#include "rigrot/geometry.hpp"

namespace rigrot {

/// M_ab = sum_i m_i (|r_i|^2 delta_ab - r_ia r_ib), mass * length^2 units.
Mat3 inertia_tensor(const RigidConfiguration& config);

enum class TopClass { Spherical, Symmetric, Asymmetric, Degenerate };

const char* to_string(TopClass t);

struct PrincipalMomenta {
  std::array<double, 3> values{};  // ascending
  Mat3 axes = Mat3::Identity();    // column k is the axis of values[k], right-handed
  TopClass top = TopClass::Asymmetric;

  // Symmetric top: the momentum of the distinct axis and of the repeated pair.
  double axis_momentum = 0.0;
  double pair_momentum = 0.0;
  int axis_index = 2;  // column of `axes` holding the symmetry axis

  /// Spherical: the common value. Degenerate: the transverse momentum I2 = I3.
  double common_momentum() const;
};

/// Eigen-decomposition of the inertia tensor and top classification. The
/// degeneracy class of the configuration overrides the momentum comparison.
PrincipalMomenta principal_momenta(const Mat3& tensor, DegeneracyClass degeneracy,
                                   const Tolerances& tol = {});

PrincipalMomenta principal_momenta(const RigidConfiguration& config,
                                   const Tolerances& tol = {});

TopClass classify_top(const std::array<double, 3>& sorted, DegeneracyClass degeneracy,
                      double rel_tol);

// Closed forms for the scalar curvature of the rotational space. The template
// parameter lets callers evaluate them over exact rationals.

template <class T>
T spherical_curvature(const T& inertia, const T& hbar) {
  return T(3) * hbar / (T(2) * inertia);
}

template <class T>
T symmetric_curvature(const T& pair, const T& axis, const T& hbar) {
  return T(2) * hbar / pair - hbar * axis / (T(2) * pair * pair);
}

template <class T>
T asymmetric_curvature(const T& i1, const T& i2, const T& i3, const T& hbar) {
  return hbar / i1 + hbar / i2 + hbar / i3 -
         hbar * (i1 * i1 + i2 * i2 + i3 * i3) / (T(2) * i1 * i2 * i3);
}

template <class T>
T degenerate_curvature(const T& transverse, const T& hbar) {
  return T(2) * hbar / transverse;
}

/// Dispatches to the closed form matching `momenta.top`.
double scalar_curvature(const PrincipalMomenta& momenta, double hbar);

/// Independent route: scalar curvature of SO(3) with the left-invariant
/// metric sum_a (I_a / hbar) theta_a^2, from the Koszul formula on structure
/// constants.
double scalar_curvature_oracle(double i1, double i2, double i3, double hbar);

/// Independent route for the collinear body: the base S^2 of the Riemannian
/// submersion SO(3) -> S^2, via O'Neill's formula. `fiber_scale` is the
/// (arbitrary) metric coefficient along the fiber; the result must not
/// depend on it.
double degenerate_curvature_oracle(double transverse, double hbar, double fiber_scale = 1.0);

/// Sectional curvature K(e_a, e_b) of the left-invariant metric above,
/// for orthonormal e_a proportional to the so(3) basis vectors.
double sectional_curvature_oracle(double i1, double i2, double i3, double hbar, int a, int b);

}  // namespace rigrot
