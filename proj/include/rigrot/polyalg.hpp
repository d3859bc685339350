#pragma once

#include <vector>

#include "rigrot/common.hpp"
#include "rigrot/exact_matrix.hpp"
#include "rigrot/polynomial.hpp"

namespace rigrot {

/// Laplacian of R^4 in complex coordinates: 4 (d_z1 d_zb1 + d_z2 d_zb2).
Poly4 laplacian_r4(const Poly4& f);

/// Laplacian of R^3.
Poly3 laplacian_r3(const Poly3& f);

/// f(-x).
Poly4 antipodal(const Poly4& f);
Poly3 antipodal(const Poly3& f);

/// Harmonic polynomials of bidegree (p, q): degree p in (z1, z2) and q in
/// (zb1, zb2). The basis is the eigenbasis of the third angular momentum
/// component, ordered by ascending l.
struct BidegreeSpace {
  int p = 0;
  int q = 0;
  std::vector<Poly4> basis;
  std::vector<HalfInteger> weights;  // l of each basis element

  int dimension() const { return static_cast<int>(basis.size()); }
  int degree() const { return p + q; }
  HalfInteger j() const { return HalfInteger::from_twice(p + q); }
};

BidegreeSpace harmonic_basis(int p, int q);

/// Harmonic homogeneous polynomials of degree l on R^3 (dimension 2l + 1).
struct HarmonicSpaceR3 {
  int degree = 0;
  std::vector<Poly3> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

HarmonicSpaceR3 harmonic_basis_r3(int degree);

/// The three left-invariant fields X_1, X_2, X_3 on S^3 = SU(2), realized as
/// first-order operators in (z1, z2, zb1, zb2), with [X_1, X_2] = X_3 cyclically.
const std::array<VectorField<4>, 3>& su2_generators();

/// Rotation generators on R^3 with the same commutation relations.
const std::array<VectorField<3>, 3>& so3_generators();

enum class SpaceKind { Bidegree, HarmonicR3 };

/// Operator matrix in the basis of a harmonic space. Adjointness flags are
/// checked exactly against the space's pairing on construction.
struct OperatorMatrix {
  ExactMatrix matrix;
  SpaceKind space = SpaceKind::Bidegree;
  int p = 0;
  int q = 0;
  bool skew_adjoint = false;
  bool self_adjoint = false;

  int dimension() const { return matrix.rows(); }
};

/// Natural L^2 pairing of the basis on the unit sphere (normalized measure):
/// gram(r, c) = <b_c, b_r>, so that <f, g> = y^* G x for coordinates x, y.
ExactMatrix gram_matrix(const BidegreeSpace& space);
ExactMatrix gram_matrix(const HarmonicSpaceR3& space);

bool is_self_adjoint(const ExactMatrix& a, const ExactMatrix& gram);
bool is_skew_adjoint(const ExactMatrix& a, const ExactMatrix& gram);

/// Matrix of X_axis (axis in 1..3). Throws RepresentationClosure if the image
/// leaves the space.
OperatorMatrix generator_matrix(int axis, const BidegreeSpace& space);
OperatorMatrix generator_matrix(int axis, const HarmonicSpaceR3& space);

/// C = -(M_1^2 + M_2^2 + M_3^2); equals j(j+1) Id on H^{p,q}.
OperatorMatrix casimir_matrix(const BidegreeSpace& space);
OperatorMatrix casimir_matrix(const HarmonicSpaceR3& space);

/// Hermitian lift i M_3 of the third generator; eigenvalues are the l labels.
OperatorMatrix angular_momentum_z(const BidegreeSpace& space);

/// Rigid-rotor Hamiltonian -(hbar/2) sum_a M_a^2 / I_a + shift * Id.
OperatorMatrix hamiltonian_matrix(const BidegreeSpace& space, const Rational& i1,
                                  const Rational& i2, const Rational& i3,
                                  const Rational& hbar, const Rational& shift);

/// Collinear body: -(hbar / (2 I)) sum_a M_a^2 + shift * Id on S^2.
OperatorMatrix hamiltonian_matrix(const HarmonicSpaceR3& space, const Rational& transverse,
                                  const Rational& hbar, const Rational& shift);

/// Polynomial with the given coordinates in the space's basis.
Poly4 combine(const BidegreeSpace& space, const std::vector<ComplexRational>& coords);

}  // namespace rigrot
