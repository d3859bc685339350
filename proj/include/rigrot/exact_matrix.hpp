#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "rigrot/rational.hpp"

namespace rigrot {

/// Dense row-major matrix over the complex rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static ExactMatrix identity(int n);
  static ExactMatrix scalar(int n, const ComplexRational& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  ComplexRational& operator()(int r, int c) { return data_[index(r, c)]; }
  const ComplexRational& operator()(int r, int c) const { return data_[index(r, c)]; }

  ExactMatrix adjoint() const;
  ComplexRational trace() const;
  bool is_zero() const;
  bool is_diagonal() const;
  /// True iff the matrix equals s * Identity for some s; stores s.
  bool is_scalar(ComplexRational* value = nullptr) const;
  bool is_real() const;

  Eigen::MatrixXcd to_complex() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ComplexRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ComplexRational& s) { return a *= s; }
  friend ExactMatrix operator*(const ComplexRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * cols_ + c); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<ComplexRational> data_;
};

/// [a, b] = ab - ba.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Basis of the null space, one column vector per element, by exact
/// reduced row echelon form. Free variables are set to 1 in turn.
std::vector<std::vector<ComplexRational>> null_space(const ExactMatrix& a);

/// Reduces to row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(ExactMatrix& a);

std::string to_string(const ExactMatrix& m);

}  // namespace rigrot
