#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigrot/spectra.hpp"

using namespace rigrot;

namespace {

SpectrumOptions jmax(int twice) {
  SpectrumOptions o;
  o.j_max = HalfInteger::from_twice(twice);
  return o;
}

std::vector<double> expand(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& l : s.lines) out.insert(out.end(), static_cast<std::size_t>(l.multiplicity), l.energy);
  std::sort(out.begin(), out.end());
  return out;
}

void expect_same_levels(const Spectrum& a, const Spectrum& b, double rel) {
  const auto ea = expand(a), eb = expand(b);
  ASSERT_EQ(ea.size(), eb.size());
  for (std::size_t k = 0; k < ea.size(); ++k) EXPECT_NEAR(ea[k], eb[k], rel * std::max(1.0, std::abs(ea[k])));
}

}  // namespace

TEST(Spherical, ValuesForUnitMoment) {
  const Spectrum s = spherical_spectrum(1, BundleKind::Plus, jmax(12));
  const std::vector<int> energies{0, 1, 3, 6, 10, 15, 21};
  const std::vector<int> mult{1, 9, 25, 49, 81, 121, 169};
  ASSERT_EQ(s.lines.size(), 7u);
  for (std::size_t k = 0; k < 7; ++k) {
    EXPECT_EQ(*s.lines[k].exact_energy, Rational(energies[k]));
    EXPECT_EQ(s.lines[k].multiplicity, mult[k]);
    EXPECT_EQ(s.lines[k].source, LineSource::ClosedForm);
  }
  EXPECT_EQ(s.total_dimension(), 1 + 9 + 25 + 49 + 81 + 121 + 169);
}

TEST(Spherical, ScalesWithHbarAndMoment) {
  SpectrumOptions o = jmax(4);
  o.hbar = 3;
  const Spectrum s = spherical_spectrum(make_rational(1, 2), BundleKind::Plus, o);
  // hbar / (2 I) = 3: E_j = 3 j (j + 1).
  EXPECT_EQ(*s.lines[1].exact_energy, Rational(6));
  EXPECT_EQ(*s.lines[2].exact_energy, Rational(18));
}

TEST(Spherical, CurvatureShiftConventions) {
  SpectrumOptions o = jmax(2);
  o.k = 2;
  const Spectrum a = spherical_spectrum(1, BundleKind::Plus, o);
  EXPECT_EQ(*a.lines[0].exact_energy, Rational(3));  // k rho with rho = 3/2
  o.convention = CurvatureConvention::OperatorFormula;
  const Spectrum b = spherical_spectrum(1, BundleKind::Plus, o);
  EXPECT_EQ(*b.lines[0].exact_energy, make_rational(-3, 2));
}

TEST(Spherical, MatchesDiagonalization) {
  for (BundleKind b : {BundleKind::Plus, BundleKind::Minus}) {
    expect_same_levels(spherical_spectrum(1, b, jmax(12)), diagonalized_spectrum(1, 1, 1, b, jmax(12)), 1e-10);
  }
}

TEST(HalfInteger, NonTrivialBundleCarriesHalfOddJ) {
  const Spectrum s = spherical_spectrum(1, BundleKind::Minus, jmax(12));
  ASSERT_FALSE(s.lines.empty());
  EXPECT_EQ(s.lines[0].j.twice, 1);
  EXPECT_EQ(*s.lines[0].exact_energy, make_rational(3, 8));
  EXPECT_EQ(s.lines[0].multiplicity, 4);
  for (const auto& l : s.lines) EXPECT_FALSE(l.j.is_integer());
  for (const auto& l : diagonalized_spectrum(1, 1, 1, BundleKind::Minus, jmax(12)).lines) EXPECT_FALSE(l.j.is_integer());
}

TEST(JSquared, HbarSquaredJJPlusOne) {
  SpectrumOptions o = jmax(4);
  o.hbar = 2;
  const Spectrum s = j_squared_spectrum(BundleKind::Plus, o);
  EXPECT_EQ(*s.lines[1].exact_energy, Rational(8));
  EXPECT_EQ(s.lines[1].multiplicity, 9);
}

TEST(Symmetric, ClosedFormMatchesDiagonalization) {
  for (BundleKind b : {BundleKind::Plus, BundleKind::Minus}) {
    const Spectrum closed = symmetric_spectrum(2, 1, b, jmax(12));
    expect_same_levels(closed, diagonalized_spectrum(2, 2, 1, b, jmax(12)), 1e-10);
    for (const auto& l : closed.lines) {
      EXPECT_EQ(l.multiplicity, l.l->twice == 0 ? l.j.twice + 1 : 2 * (l.j.twice + 1));
    }
  }
  expect_same_levels(symmetric_spectrum(make_rational(3, 2), 3, BundleKind::Plus, jmax(8)),
                     diagonalized_spectrum(make_rational(3, 2), make_rational(3, 2), 3, BundleKind::Plus, jmax(8)), 1e-10);
}

TEST(Symmetric, ExactDegeneracyGroupsMatchBruteForce) {
  // E = (j(j+1) + l^2) / 4 for (pair, axis) = (2, 1): group by 4E exactly.
  const Spectrum s = symmetric_spectrum(2, 1, BundleKind::Plus, jmax(24));
  std::map<int, int> brute;
  for (int j = 0; j <= 12; ++j)
    for (int l = 0; l <= j; ++l) brute[j * (j + 1) + l * l] += l == 0 ? 2 * j + 1 : 2 * (2 * j + 1);
  const auto groups = degeneracy_groups(s);
  ASSERT_EQ(groups.size(), brute.size());
  auto it = brute.begin();
  for (const auto& g : groups) {
    EXPECT_EQ(*g.exact_energy, make_rational(it->first, 4));
    EXPECT_EQ(g.multiplicity, it->second);
    ++it;
  }
}

TEST(Asymmetric, TriadAtJEqualsOne) {
  const auto blocks = diagonalize_degree(2, 1, 2, 3, jmax(2));
  ASSERT_EQ(blocks.size(), 3u);
  for (const auto& b : blocks) {
    ASSERT_EQ(b.eigen.exact.size(), 3u);
    EXPECT_EQ(*b.eigen.exact[0], make_rational(5, 12));
    EXPECT_EQ(*b.eigen.exact[1], make_rational(2, 3));
    EXPECT_EQ(*b.eigen.exact[2], make_rational(3, 4));
  }
  const Spectrum s = asymmetric_spectrum(1, 2, 3, BundleKind::Plus, jmax(2));
  ASSERT_EQ(s.lines.size(), 4u);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(s.lines[k].multiplicity, 3);
}

TEST(Asymmetric, MatchesLadderOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> u(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    const int a = u(rng), b = u(rng) + 10, c = u(rng) + 20;
    for (BundleKind bundle : {BundleKind::Plus, BundleKind::Minus}) {
      const Spectrum s = diagonalized_spectrum(a, b, c, bundle, jmax(9));
      for (int t = bundle == BundleKind::Plus ? 0 : 1; t <= 9; t += 2) {
        std::vector<double> ours;
        for (const auto& l : s.lines) {
          if (l.j.twice == t) ours.insert(ours.end(), static_cast<std::size_t>(l.multiplicity / (t + 1)), l.energy);
        }
        std::sort(ours.begin(), ours.end());
        const auto ref = oracle::rotor_levels(a, b, c, 1.0, t);
        ASSERT_EQ(ours.size(), ref.size());
        for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(ours[k], ref[k], 1e-10 * std::max(1.0, ref[k]));
      }
    }
  }
}

TEST(Asymmetric, NearTiesRouteToClosedForms) {
  const Spectrum s = asymmetric_spectrum(2, 2, 1, BundleKind::Plus, jmax(4));
  EXPECT_EQ(s.meta.top, TopClass::Symmetric);
  EXPECT_FALSE(s.meta.warnings.empty());
  EXPECT_TRUE(s.lines == symmetric_spectrum(2, 1, BundleKind::Plus, jmax(4)).lines);
  const Spectrum sph = asymmetric_spectrum(3, 3, 3, BundleKind::Minus, jmax(3));
  EXPECT_EQ(sph.meta.top, TopClass::Spherical);
}

TEST(Asymmetric, ParallelMatchesSerial) {
  SpectrumOptions par = jmax(10), ser = jmax(10);
  ser.parallel = false;
  EXPECT_TRUE(diagonalized_spectrum(1, 2, 3, BundleKind::Plus, par) == diagonalized_spectrum(1, 2, 3, BundleKind::Plus, ser));
  const auto keys = blocks_up_to(6);
  RotorParameters params{make_rational(1, 3), 2, 5, 1, 0, 4};
  const auto a = diagonalize_blocks_serial(keys, params);
  const auto b = diagonalize_blocks_parallel(keys, params);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].key, b[k].key);
    EXPECT_EQ(a[k].eigen.values, b[k].eigen.values);
    EXPECT_EQ(a[k].eigen.exact, b[k].eigen.exact);
  }
}

TEST(Degenerate, SphereLevelsAndMultiplicities) {
  const Spectrum s = degenerate_spectrum(2, jmax(16));
  ASSERT_EQ(s.lines.size(), 9u);
  for (int ell = 0; ell <= 8; ++ell) {
    const auto& line = s.lines[static_cast<std::size_t>(ell)];
    EXPECT_EQ(*line.exact_energy, make_rational(ell * (ell + 1), 4));
    EXPECT_EQ(line.multiplicity, 2 * ell + 1);
    EXPECT_EQ(line.sections.size(), static_cast<std::size_t>(2 * ell + 1));
  }
}

TEST(Monopole, ZeroChargeIsTheFreeSymmetricTop) {
  const Spectrum free = symmetric_spectrum(2, 1, BundleKind::Plus, jmax(8));
  const Spectrum mono = monopole_spectrum(2, 1, BundleKind::Plus, 0, 5, jmax(8));
  EXPECT_EQ(free.total_dimension(), mono.total_dimension());
  for (const auto& l : mono.lines) {
    const auto it = std::find_if(free.lines.begin(), free.lines.end(),
                                 [&](const SpectralLine& f) { return f.j == l.j && *f.l == l.l->abs(); });
    ASSERT_NE(it, free.lines.end());
    EXPECT_EQ(*it->exact_energy, *l.exact_energy);
  }
}

TEST(Monopole, SplittingIsLinearInL) {
  const Rational nu = make_rational(2, 3), q = 3, axis = make_rational(1, 2);
  const Spectrum s = monopole_spectrum(2, axis, BundleKind::Minus, nu, q, jmax(7));
  int checked = 0;
  for (const auto& l : s.lines) {
    if (l.l->twice <= 0) continue;
    const auto it = std::find_if(s.lines.begin(), s.lines.end(),
                                 [&](const SpectralLine& f) { return f.j == l.j && *f.l == -*l.l; });
    ASSERT_NE(it, s.lines.end());
    EXPECT_EQ(*it->exact_energy - *l.exact_energy, 2 * nu * q * make_rational(l.l->twice, 2) / axis);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Spectra, RejectsBadArguments) {
  EXPECT_THROW(spherical_spectrum(0, BundleKind::Plus), Error);
  EXPECT_THROW(spherical_spectrum(1, BundleKind::Plus, jmax(52)), Error);
  SpectrumOptions o;
  o.hbar = -1;
  EXPECT_THROW(spherical_spectrum(1, BundleKind::Plus, o), Error);
}

TEST(MomentumMap, EqualsInertiaBilinearForm) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g;
  ParticleSystem sys;
  for (int i = 0; i < 4; ++i) {
    sys.masses.push_back(1.0 + std::abs(g(rng)));
    sys.charges.push_back(0.0);
    sys.positions.push_back({g(rng), g(rng), g(rng)});
  }
  const auto cfg = canonicalize(sys);
  const Vec3 omega(g(rng), g(rng), g(rng)), psi(g(rng), g(rng), g(rng));
  const auto v = rigid_velocities(cfg, psi);
  EXPECT_NEAR(classical_momentum_map(omega, cfg, v, 2.0), omega.dot(inertia_tensor(cfg) * psi) / 2.0, 1e-12);
}
