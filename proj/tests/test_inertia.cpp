#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigrot/inertia.hpp"
#include "rigrot/rational.hpp"

using namespace rigrot;

namespace {

RigidConfiguration body(std::vector<double> masses, std::vector<Vec3> positions) {
  ParticleSystem s;
  s.charges.assign(masses.size(), 0.0);
  s.masses = std::move(masses);
  s.positions = std::move(positions);
  return canonicalize(s);
}

}  // namespace

TEST(Inertia, DipoleMomentIsTwoMASquared) {
  const double a = 1.3, m = 0.7;
  const auto pm = principal_momenta(body({m, m}, {{a, 0, 0}, {-a, 0, 0}}));
  EXPECT_EQ(pm.top, TopClass::Degenerate);
  EXPECT_NEAR(pm.values[0], 0.0, 1e-14);
  EXPECT_NEAR(pm.common_momentum(), 2 * m * a * a, 1e-14);
}

TEST(Inertia, RegularSolidsAreSpherical) {
  const auto tet = principal_momenta(body({1, 1, 1, 1}, {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
  EXPECT_EQ(tet.top, TopClass::Spherical);
  // Each vertex sits at squared distance 3; I = (2/3) sum m r^2.
  EXPECT_NEAR(tet.common_momentum(), 8.0, 1e-13);

  std::vector<Vec3> cube;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) cube.push_back(Vec3(x, y, z));
  const auto c = principal_momenta(body(std::vector<double>(8, 1.0), cube));
  EXPECT_EQ(c.top, TopClass::Spherical);
  EXPECT_NEAR(c.common_momentum(), 16.0, 1e-13);
}

TEST(Inertia, EquilateralTriangleIsSymmetric) {
  const double s3 = std::sqrt(3.0) / 2;
  const auto pm = principal_momenta(body({1, 1, 1}, {{1, 0, 0}, {-0.5, s3, 0}, {-0.5, -s3, 0}}));
  EXPECT_EQ(pm.top, TopClass::Symmetric);
  EXPECT_NEAR(pm.pair_momentum, 1.5, 1e-14);
  EXPECT_NEAR(pm.axis_momentum, 3.0, 1e-14);
  EXPECT_NEAR(std::abs(pm.axes.col(pm.axis_index).z()), 1.0, 1e-14);
}

TEST(Inertia, WaterLikeTriangleIsAsymmetric) {
  const auto pm = principal_momenta(body({16, 1, 1}, {{0, 0, 0}, {0.757, 0.586, 0}, {-0.757, 0.586, 0}}));
  EXPECT_EQ(pm.top, TopClass::Asymmetric);
  EXPECT_LT(pm.values[0], pm.values[1]);
  EXPECT_LT(pm.values[1], pm.values[2]);
  // Planar body: the largest moment is the sum of the other two.
  EXPECT_NEAR(pm.values[2], pm.values[0] + pm.values[1], 1e-13);
}

TEST(Inertia, AxesDiagonalizeTheTensor) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec3> pos;
    std::vector<double> masses;
    for (int i = 0; i < 5; ++i) {
      pos.push_back({g(rng), g(rng), g(rng)});
      masses.push_back(1.0 + std::abs(g(rng)));
    }
    const auto cfg = body(masses, pos);
    const Mat3 t = inertia_tensor(cfg);
    // Independent evaluation of the tensor: sum m (|r|^2 I - r r^T).
    Mat3 ref = Mat3::Zero();
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      const Vec3& r = cfg.relatives[i];
      ref += cfg.masses[i] * (r.squaredNorm() * Mat3::Identity() - r * r.transpose());
    }
    EXPECT_LT((t - ref).norm(), 1e-12);
    const auto pm = principal_momenta(cfg);
    EXPECT_NEAR(pm.axes.determinant(), 1.0, 1e-12);
    for (int k = 0; k < 3; ++k) {
      EXPECT_LT((t * pm.axes.col(k) - pm.values[static_cast<std::size_t>(k)] * pm.axes.col(k)).norm(), 1e-11);
    }
  }
}

TEST(Curvature, ClosedFormsMatchKillingFormOracle) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)); };
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng), h = u(rng);
    EXPECT_TRUE(close(asymmetric_curvature(a, b, c, h), oracle::besse_scalar_curvature(a, b, c, h)));
    EXPECT_TRUE(close(symmetric_curvature(a, b, h), oracle::besse_scalar_curvature(a, a, b, h)));
    EXPECT_TRUE(close(spherical_curvature(a, h), oracle::besse_scalar_curvature(a, a, a, h)));
    EXPECT_TRUE(close(scalar_curvature_oracle(a, b, c, h), oracle::besse_scalar_curvature(a, b, c, h)));
  }
}

TEST(Curvature, SymmetricLabelingPairTwoAxisOne) {
  const Rational rho = symmetric_curvature<Rational>(2, 1, 1);
  EXPECT_EQ(rho, make_rational(7, 8));
  EXPECT_NEAR(oracle::besse_scalar_curvature(2, 2, 1, 1), 0.875, 1e-14);
}

TEST(Curvature, SphericalLimitIsExact) {
  for (int n = 1; n <= 30; ++n) {
    const Rational i(n), h = make_rational(n + 2, 3);
    EXPECT_EQ(asymmetric_curvature(i, i, i, h), Rational(3 * h / (2 * i)));
    EXPECT_NEAR(asymmetric_curvature(1.0 * n, 1.0 * n, 1.0 * n, h.get_d()), 1.5 * h.get_d() / n, 1e-13);
  }
}

TEST(Curvature, DegenerateMatchesRoundSphere) {
  for (double i : {0.5, 1.0, 2.0, 7.5}) {
    for (double hbar : {0.3, 1.0, 2.0}) {
      const double expected = degenerate_curvature(i, hbar);
      EXPECT_NEAR(oracle::sphere_scalar_curvature(i / hbar, 0.9), expected, 1e-6 * expected);
      for (double fiber : {0.1, 1.0, 10.0}) {
        EXPECT_NEAR(degenerate_curvature_oracle(i, hbar, fiber), expected, 1e-12 * expected);
      }
    }
  }
}

TEST(Curvature, DispatchFollowsTopClass) {
  PrincipalMomenta pm;
  pm.values = {1, 2, 3};
  pm.top = TopClass::Asymmetric;
  EXPECT_DOUBLE_EQ(scalar_curvature(pm, 1.0), asymmetric_curvature(1.0, 2.0, 3.0, 1.0));
  pm.values = {2, 2, 2};
  pm.top = TopClass::Spherical;
  EXPECT_DOUBLE_EQ(scalar_curvature(pm, 1.0), 0.75);
}
