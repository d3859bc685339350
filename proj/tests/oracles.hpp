#pragma once

// Reference computations used only by the tests. Each one follows a route
// that shares no code with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// Rotor (hbar/2)(Jx^2/i1 + Jy^2/i2 + Jz^2/i3) in the |j, m> basis, written
/// with J+^2 and J-^2 matrix elements, as a real symmetric matrix.
inline std::vector<double> rotor_levels(double i1, double i2, double i3, double hbar, int twice_j) {
  const int n = twice_j + 1;
  const double j = 0.5 * twice_j;
  const double jj = j * (j + 1);
  const double a = 1.0 / i1, b = 1.0 / i2, c = 1.0 / i3;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = -j + k;
    h(k, k) = 0.5 * hbar * (0.5 * (a + b) * (jj - m * m) + c * m * m);
    if (k + 2 < n) {
      const double up = std::sqrt((jj - m * (m + 1)) * (jj - (m + 1) * (m + 2)));
      h(k + 2, k) = h(k, k + 2) = 0.5 * hbar * 0.25 * (a - b) * up;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Scalar curvature of SO(3) with the left-invariant metric diag(I_a / hbar)
/// from s = -1/4 sum |[e_i, e_j]|^2 - 1/2 sum_i B(e_i, e_i), B the Killing form.
inline double besse_scalar_curvature(double i1, double i2, double i3, double hbar) {
  const std::array<double, 3> g{i1 / hbar, i2 / hbar, i3 / hbar};
  double c[3][3][3] = {};
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : cyc) {
    const double v = std::sqrt(g[p[2]] / (g[p[0]] * g[p[1]]));
    c[p[0]][p[1]][p[2]] = v;
    c[p[1]][p[0]][p[2]] = -v;
  }
  double brackets = 0.0;
  for (auto& x : c)
    for (auto& y : x)
      for (double z : y) brackets += z * z;
  double killing = 0.0;
  for (int i = 0; i < 3; ++i) {
    Eigen::Matrix3d ad;
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) ad(k, j) = c[i][j][k];
    killing += (ad * ad).trace();
  }
  return -0.25 * brackets - 0.5 * killing;
}

/// Scalar curvature (twice the Gauss curvature) at colatitude theta of the
/// metric scale * (dtheta^2 + sin^2 theta dphi^2), by finite differences of
/// K = -(sqrt G)_theta theta / sqrt G for an orthogonal metric with E = scale.
inline double sphere_scalar_curvature(double scale, double theta) {
  const auto root_g = [&](double t) { return std::sqrt(scale) * std::sin(t); };
  const double h = 1e-4;
  const double second = (root_g(theta + h) - 2.0 * root_g(theta) + root_g(theta - h)) / (h * h);
  return 2.0 * (-second / root_g(theta)) / scale;
}

/// Gauss-Legendre nodes and weights on [0, 1] (Golub-Welsch).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int n) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(k)] = 0.5 * (solver.eigenvalues()(k) + 1.0);
    const double v = solver.eigenvectors()(0, k);
    w[static_cast<std::size_t>(k)] = v * v;  // weights on [-1, 1] sum to 2, halved here
  }
  return {x, w};
}

/// Normalized integral over S^3 of h(z1, z2, conj z1, conj z2) for a
/// polynomial h of total degree <= degree, using Hopf coordinates
/// z1 = sqrt(u) e^{i a}, z2 = sqrt(1-u) e^{i b} with u uniform on [0, 1].
template <class F>
std::complex<double> integrate_s3(F h, int degree) {
  const auto [u, w] = gauss_legendre01(degree / 2 + 2);
  const int m = degree + 2;
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (int ia = 0; ia < m; ++ia) {
      for (int ib = 0; ib < m; ++ib) {
        const double a = 2.0 * std::numbers::pi * ia / m, b = 2.0 * std::numbers::pi * ib / m;
        const std::complex<double> z1 = std::sqrt(u[k]) * std::polar(1.0, a);
        const std::complex<double> z2 = std::sqrt(1.0 - u[k]) * std::polar(1.0, b);
        acc += w[k] * h(z1, z2) / static_cast<double>(m * m);
      }
    }
  }
  return acc;
}

/// Normalized integral over S^2 of h(x, y, z), polynomial of degree <= degree.
template <class F>
double integrate_s2(F h, int degree) {
  const auto [t, w] = gauss_legendre01(degree / 2 + 2);
  const int m = degree + 2;
  double acc = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double z = 2.0 * t[k] - 1.0;
    const double r = std::sqrt(1.0 - z * z);
    for (int ip = 0; ip < m; ++ip) {
      const double phi = 2.0 * std::numbers::pi * ip / m;
      acc += w[k] * h(r * std::cos(phi), r * std::sin(phi), z) / m;
    }
  }
  return acc;
}

}  // namespace oracle
