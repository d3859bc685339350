#include "rigrot/inertia.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace rigrot {

Mat3 inertia_tensor(const RigidConfiguration& config) {
  Mat3 m = Mat3::Zero();
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Vec3& r = config.relatives[i];
    m += config.masses[i] * (r.squaredNorm() * Mat3::Identity() - r * r.transpose());
  }
  return m;
}

const char* to_string(TopClass t) {
  switch (t) {
    case TopClass::Spherical: return "Spherical";
    case TopClass::Symmetric: return "Symmetric";
    case TopClass::Asymmetric: return "Asymmetric";
    case TopClass::Degenerate: return "Degenerate";
  }
  return "?";
}

double PrincipalMomenta::common_momentum() const {
  switch (top) {
    case TopClass::Spherical: return (values[0] + values[1] + values[2]) / 3.0;
    case TopClass::Degenerate: return 0.5 * (values[1] + values[2]);
    case TopClass::Symmetric: return pair_momentum;
    case TopClass::Asymmetric: break;
  }
  throw Error(ErrorCode::InvalidArgument, "asymmetric top has no common momentum");
}

TopClass classify_top(const std::array<double, 3>& sorted, DegeneracyClass degeneracy,
                      double rel_tol) {
  if (is_degenerate(degeneracy)) return TopClass::Degenerate;
  const double scale = rel_tol * std::max(std::abs(sorted[2]), 1e-300);
  const bool low_pair = std::abs(sorted[1] - sorted[0]) <= scale;
  const bool high_pair = std::abs(sorted[2] - sorted[1]) <= scale;
  if (std::abs(sorted[2] - sorted[0]) <= scale) return TopClass::Spherical;
  if (low_pair || high_pair) return TopClass::Symmetric;
  return TopClass::Asymmetric;
}

PrincipalMomenta principal_momenta(const Mat3& tensor, DegeneracyClass degeneracy,
                                   const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(tensor);
  PrincipalMomenta out;
  // Eigen returns eigenvalues in ascending order.
  for (int k = 0; k < 3; ++k) out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
  out.axes = solver.eigenvectors();
  if (out.axes.determinant() < 0.0) out.axes.col(2) *= -1.0;

  out.top = classify_top(out.values, degeneracy, tol.rel);
  if (out.top == TopClass::Symmetric) {
    const auto& v = out.values;
    const double scale = tol.rel * std::abs(v[2]);
    if (std::abs(v[1] - v[0]) <= scale) {
      out.pair_momentum = 0.5 * (v[0] + v[1]);
      out.axis_momentum = v[2];
      out.axis_index = 2;
    } else {
      out.pair_momentum = 0.5 * (v[1] + v[2]);
      out.axis_momentum = v[0];
      out.axis_index = 0;
    }
  } else if (out.top == TopClass::Degenerate) {
    out.pair_momentum = out.common_momentum();
    out.axis_momentum = out.values[0];
    out.axis_index = 0;
  }
  return out;
}

PrincipalMomenta principal_momenta(const RigidConfiguration& config, const Tolerances& tol) {
  return principal_momenta(inertia_tensor(config), config.degeneracy, tol);
}

double scalar_curvature(const PrincipalMomenta& momenta, double hbar) {
  const auto& v = momenta.values;
  switch (momenta.top) {
    case TopClass::Spherical: return spherical_curvature(momenta.common_momentum(), hbar);
    case TopClass::Symmetric:
      return symmetric_curvature(momenta.pair_momentum, momenta.axis_momentum, hbar);
    case TopClass::Asymmetric: return asymmetric_curvature(v[0], v[1], v[2], hbar);
    case TopClass::Degenerate: return degenerate_curvature(momenta.common_momentum(), hbar);
  }
  return 0.0;
}

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// Left-invariant metric on SO(3) with G(X_a, X_a) = g[a] and [X_a, X_b] =
// eps_abc X_c. Works in the orthonormal frame e_a = X_a / sqrt(g[a]).
class LeftInvariantMetric {
 public:
  explicit LeftInvariantMetric(const std::array<double, 3>& g) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          c_[i][j][k] = levi_civita(i, j, k) * std::sqrt(g[k] / (g[i] * g[j]));
    // Koszul formula for left-invariant fields.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          gamma_[i][j][k] = 0.5 * (c_[i][j][k] - c_[j][k][i] + c_[k][i][j]);
  }

  /// <R(e_i, e_j) e_k, e_m> with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
  double riemann(int i, int j, int k, int m) const {
    double acc = 0.0;
    for (int l = 0; l < 3; ++l) {
      acc += gamma_[j][k][l] * gamma_[i][l][m] - gamma_[i][k][l] * gamma_[j][l][m] -
             c_[i][j][l] * gamma_[l][k][m];
    }
    return acc;
  }

  double sectional(int i, int j) const { return riemann(i, j, j, i); }

  double scalar() const {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) acc += sectional(i, j);
    return acc;
  }

  double structure(int i, int j, int k) const { return c_[i][j][k]; }

 private:
  double c_[3][3][3]{};
  double gamma_[3][3][3]{};
};

}  // namespace

double sectional_curvature_oracle(double i1, double i2, double i3, double hbar, int a, int b) {
  LeftInvariantMetric metric({i1 / hbar, i2 / hbar, i3 / hbar});
  return metric.sectional(a, b);
}

double scalar_curvature_oracle(double i1, double i2, double i3, double hbar) {
  if (!(i1 > 0.0 && i2 > 0.0 && i3 > 0.0 && hbar > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "curvature oracle needs positive momenta");
  }
  return LeftInvariantMetric({i1 / hbar, i2 / hbar, i3 / hbar}).scalar();
}

double degenerate_curvature_oracle(double transverse, double hbar, double fiber_scale) {
  const double g = transverse / hbar;
  LeftInvariantMetric metric({g, g, fiber_scale * g});
  // O'Neill: K_base(X, Y) = K(X, Y) + 3/4 |[X, Y]^vertical|^2 for horizontal X, Y.
  const double vertical = metric.structure(0, 1, 2);
  const double k_base = metric.sectional(0, 1) + 0.75 * vertical * vertical;
  return 2.0 * k_base;
}

}  // namespace rigrot
