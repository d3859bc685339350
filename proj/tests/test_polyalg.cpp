#include <array>
#include <complex>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigrot/polyalg.hpp"

using namespace rigrot;

namespace {

using cd = std::complex<double>;

cd eval4(const Poly4& f, cd z1, cd z2) {
  const std::array<cd, 4> x{z1, z2, std::conj(z1), std::conj(z2)};
  return f.evaluate(std::span<const cd, 4>(x));
}

double eval3(const Poly3& f, double x, double y, double z) {
  const std::array<cd, 3> v{x, y, z};
  return f.evaluate(std::span<const cd, 3>(v)).real();
}

// exp(t i sigma_a / 2) applied to (z1, z2).
std::array<cd, 2> su2_flow(int axis, double t, cd z1, cd z2) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const cd i(0, 1);
  switch (axis) {
    case 1: return {c * z1 + i * s * z2, i * s * z1 + c * z2};
    case 2: return {c * z1 + s * z2, -s * z1 + c * z2};
    default: return {(c + i * s) * z1, (c - i * s) * z2};
  }
}

}  // namespace

TEST(HarmonicBasis, DimensionsHarmonicityAndBidegree) {
  for (int d = 0; d <= 8; ++d) {
    int total = 0;
    for (int p = 0; p <= d; ++p) {
      const BidegreeSpace s = harmonic_basis(p, d - p);
      EXPECT_EQ(s.dimension(), d + 1);
      total += s.dimension();
      for (const auto& f : s.basis) {
        EXPECT_TRUE(laplacian_r4(f).is_zero());
        for (const auto& [e, c] : f.terms()) {
          EXPECT_EQ(e[0] + e[1], p);
          EXPECT_EQ(e[2] + e[3], d - p);
        }
      }
    }
    EXPECT_EQ(total, (d + 1) * (d + 1));
  }
}

TEST(HarmonicBasis, GramMatchesQuadrature) {
  for (int d = 0; d <= 5; ++d) {
    for (int p = 0; p <= d; ++p) {
      const BidegreeSpace s = harmonic_basis(p, d - p);
      const ExactMatrix g = gram_matrix(s);
      for (int r = 0; r < s.dimension(); ++r) {
        for (int c = 0; c < s.dimension(); ++c) {
          const auto& fr = s.basis[static_cast<std::size_t>(r)];
          const auto& fc = s.basis[static_cast<std::size_t>(c)];
          const cd q = oracle::integrate_s3([&](cd z1, cd z2) { return eval4(fc, z1, z2) * std::conj(eval4(fr, z1, z2)); },
                                            2 * d);
          EXPECT_NEAR(std::abs(q - g(r, c).to_complex()), 0.0, 1e-12) << "p=" << p << " q=" << d - p;
        }
      }
    }
  }
}

TEST(Generators, MatchTheSu2Flow) {
  const cd z1(0.3, -0.4), z2(-0.5, 0.7);
  const double h = 1e-5;
  const BidegreeSpace s = harmonic_basis(2, 1);
  for (int axis = 1; axis <= 3; ++axis) {
    const auto& field = su2_generators()[static_cast<std::size_t>(axis - 1)];
    for (const auto& f : s.basis) {
      const auto fwd = su2_flow(axis, h, z1, z2), bwd = su2_flow(axis, -h, z1, z2);
      const cd numeric = (eval4(f, fwd[0], fwd[1]) - eval4(f, bwd[0], bwd[1])) / (2 * h);
      EXPECT_NEAR(std::abs(numeric - eval4(field.apply(f), z1, z2)), 0.0, 1e-8);
    }
  }
}

TEST(Generators, ExactCommutatorsAndCasimir) {
  for (int d = 0; d <= 8; ++d) {
    for (int p = 0; p <= d; ++p) {
      const BidegreeSpace s = harmonic_basis(p, d - p);
      std::array<OperatorMatrix, 3> m{generator_matrix(1, s), generator_matrix(2, s), generator_matrix(3, s)};
      for (const auto& op : m) EXPECT_TRUE(op.skew_adjoint);
      EXPECT_EQ(commutator(m[0].matrix, m[1].matrix), m[2].matrix);
      EXPECT_EQ(commutator(m[1].matrix, m[2].matrix), m[0].matrix);
      EXPECT_EQ(commutator(m[2].matrix, m[0].matrix), m[1].matrix);

      const OperatorMatrix c = casimir_matrix(s);
      EXPECT_TRUE(c.self_adjoint);
      EXPECT_EQ(c.matrix, ExactMatrix::scalar(d + 1, ComplexRational(make_rational(d * (d + 2), 4))));
    }
  }
}

TEST(Generators, WeightsRunFromMinusJToJ) {
  for (int d = 0; d <= 8; ++d) {
    for (int p = 0; p <= d; ++p) {
      const BidegreeSpace s = harmonic_basis(p, d - p);
      const OperatorMatrix l3 = angular_momentum_z(s);
      EXPECT_TRUE(l3.self_adjoint);
      ASSERT_TRUE(l3.matrix.is_diagonal());
      for (int k = 0; k <= d; ++k) {
        EXPECT_EQ(l3.matrix(k, k), ComplexRational(make_rational(2 * k - d, 2)));
        EXPECT_EQ(s.weights[static_cast<std::size_t>(k)].twice, 2 * k - d);
      }
    }
  }
}

TEST(Parity, AntipodalSignIsMinusOneToTheDegree) {
  for (int d = 0; d <= 6; ++d) {
    for (int p = 0; p <= d; ++p) {
      for (const auto& f : harmonic_basis(p, d - p).basis) {
        EXPECT_EQ(antipodal(f), d % 2 == 0 ? f : f * ComplexRational(-1));
      }
    }
  }
}

TEST(Hamiltonian, SelfAdjointForAnyMomenta) {
  const BidegreeSpace s = harmonic_basis(2, 2);
  const OperatorMatrix h = hamiltonian_matrix(s, 1, make_rational(5, 3), 7, make_rational(1, 2), 3);
  EXPECT_TRUE(h.self_adjoint);
  EXPECT_FALSE(h.matrix.is_diagonal());
  EXPECT_THROW(hamiltonian_matrix(s, 0, 1, 1, 1, 0), Error);
}

TEST(HarmonicR3, DimensionsCasimirAndPairing) {
  for (int ell = 0; ell <= 8; ++ell) {
    const HarmonicSpaceR3 s = harmonic_basis_r3(ell);
    EXPECT_EQ(s.dimension(), 2 * ell + 1);
    for (const auto& f : s.basis) EXPECT_TRUE(laplacian_r3(f).is_zero());
    const OperatorMatrix c = casimir_matrix(s);
    EXPECT_EQ(c.matrix, ExactMatrix::scalar(2 * ell + 1, ComplexRational(Rational(ell * (ell + 1)))));
    std::array<ExactMatrix, 3> m{generator_matrix(1, s).matrix, generator_matrix(2, s).matrix,
                                 generator_matrix(3, s).matrix};
    EXPECT_EQ(commutator(m[0], m[1]), m[2]);
    if (ell <= 4) {
      const ExactMatrix g = gram_matrix(s);
      for (int r = 0; r < s.dimension(); ++r)
        for (int col = 0; col < s.dimension(); ++col) {
          const auto& fr = s.basis[static_cast<std::size_t>(r)];
          const auto& fc = s.basis[static_cast<std::size_t>(col)];
          const double q = oracle::integrate_s2(
              [&](double x, double y, double z) { return eval3(fc, x, y, z) * eval3(fr, x, y, z); }, 2 * ell);
          EXPECT_NEAR(q, g(r, col).re.get_d(), 1e-12);
        }
    }
  }
}
