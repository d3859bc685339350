#include "rigrot/exact_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "rigrot/common.hpp"

namespace rigrot {

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::deflate(const Rational& root) const {
  // Synthetic division by (x - root).
  RationalPolynomial out;
  if (coeffs.size() < 2) return out;
  out.coeffs.resize(coeffs.size() - 1);
  Rational carry = 0;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    carry = coeffs[k] + carry * root;
    out.coeffs[k - 1] = carry;
  }
  return out;
}

RationalPolynomial characteristic_polynomial(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of non-square matrix");
  const int n = a.rows();
  std::vector<ComplexRational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = ComplexRational(1);
  ExactMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + ExactMatrix::scalar(n, c[static_cast<std::size_t>(n - k + 1)]);
    const ComplexRational tr = (a * m).trace();
    c[static_cast<std::size_t>(n - k)] = tr * ComplexRational(make_rational(-1, k));
  }
  RationalPolynomial p;
  p.coeffs.reserve(c.size());
  for (auto& x : c) {
    if (!x.is_real()) {
      throw Error(ErrorCode::NotSelfAdjoint, "characteristic polynomial has complex coefficients");
    }
    p.coeffs.push_back(x.re);
  }
  return p;
}

EigenDecomposition diagonalize_numeric(const ExactMatrix& h, const ExactMatrix& gram) {
  const Eigen::MatrixXcd hd = h.to_complex();
  const Eigen::MatrixXcd gd = gram.to_complex();
  Eigen::LLT<Eigen::MatrixXcd> llt(gd);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotSelfAdjoint, "pairing is not positive definite");
  }
  const Eigen::MatrixXcd l = llt.matrixL();
  const Eigen::MatrixXcd l_adj_inv = l.adjoint().inverse();
  Eigen::MatrixXcd s = l.adjoint() * hd * l_adj_inv;
  s = 0.5 * (s + s.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s);
  EigenDecomposition out;
  const auto n = solver.eigenvalues().size();
  out.values.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  out.exact.assign(static_cast<std::size_t>(n), std::nullopt);
  out.vectors = l_adj_inv * solver.eigenvectors();
  return out;
}

static EigenDecomposition diagonal_case(const ExactMatrix& h) {
  const int n = h.rows();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < n; ++i) {
    if (!h(i, i).is_real()) throw Error(ErrorCode::NotSelfAdjoint, "complex diagonal entry");
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h(a, a).re < h(b, b).re; });

  EigenDecomposition out;
  out.exact_path = true;
  out.vectors = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const int i = order[static_cast<std::size_t>(k)];
    out.exact.emplace_back(h(i, i).re);
    out.values.push_back(h(i, i).re.get_d());
    out.vectors(i, k) = 1.0;
  }
  return out;
}

EigenDecomposition diagonalize(const ExactMatrix& h, const ExactMatrix& gram,
                               const EigenOptions& options) {
  if (h.is_diagonal()) return diagonal_case(h);

  EigenDecomposition out = diagonalize_numeric(h, gram);
  if (!options.use_characteristic_polynomial) return out;

  RationalPolynomial p = characteristic_polynomial(h);
  out.exact_path = true;
  const std::size_t n = out.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (out.exact[i]) continue;
    const double v = out.values[i];
    const Rational r = approximate_rational(v, options.max_denominator);
    if (std::abs(r.get_d() - v) > 1e-8 * (1.0 + std::abs(v))) continue;
    if (p.degree() < 1 || sgn(p(r)) != 0) continue;
    int multiplicity = 0;
    while (p.degree() >= 1 && sgn(p(r)) == 0) {
      p = p.deflate(r);
      ++multiplicity;
    }
    for (std::size_t k = i; k < n && multiplicity > 0; ++k) {
      if (!out.exact[k] && std::abs(out.values[k] - v) <= 1e-6 * (1.0 + std::abs(v))) {
        out.exact[k] = r;
        out.values[k] = r.get_d();
        --multiplicity;
      }
    }
  }
  return out;
}

}  // namespace rigrot
