#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "rigrot/exact_matrix.hpp"
#include "rigrot/rational.hpp"

namespace rigrot {

/// Polynomial with rational coefficients, lowest degree first.
struct RationalPolynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational operator()(const Rational& x) const;
  /// Divides by (x - root); requires root to be a root.
  RationalPolynomial deflate(const Rational& root) const;
};

/// det(x I - A) by the Faddeev-LeVerrier recursion. Throws NotSelfAdjoint if
/// a coefficient has a non-zero imaginary part.
RationalPolynomial characteristic_polynomial(const ExactMatrix& a);

/// Eigen-decomposition of an operator that is self-adjoint for a positive
/// definite pairing `gram`. Eigenvalues ascend; `vectors` holds eigenvectors
/// as columns in the original basis coordinates.
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<std::optional<Rational>> exact;  // set where proven exactly
  Eigen::MatrixXcd vectors;
  bool exact_path = false;  // diagonal or characteristic-polynomial route
};

struct EigenOptions {
  bool use_characteristic_polynomial = true;
  long max_denominator = 1'000'000;
};

EigenDecomposition diagonalize(const ExactMatrix& h, const ExactMatrix& gram,
                               const EigenOptions& options = {});

/// Floating-point route only (no exact certification).
EigenDecomposition diagonalize_numeric(const ExactMatrix& h, const ExactMatrix& gram);

}  // namespace rigrot
