#include "rigrot/exact_matrix.hpp"

#include <sstream>
#include <utility>

#include "rigrot/common.hpp"

namespace rigrot {

ExactMatrix ExactMatrix::identity(int n) { return scalar(n, ComplexRational(1)); }

ExactMatrix ExactMatrix::scalar(int n, const ComplexRational& s) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

ComplexRational ExactMatrix::trace() const {
  ComplexRational t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_scalar(ComplexRational* value) const {
  if (!is_square() || !is_diagonal()) return false;
  for (int i = 1; i < rows_; ++i)
    if (!((*this)(i, i) == (*this)(0, 0))) return false;
  if (value != nullptr) *value = rows_ > 0 ? (*this)(0, 0) : ComplexRational();
  return true;
}

bool ExactMatrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
  Eigen::MatrixXcd out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).to_complex();
  return out;
}

static void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ComplexRational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const ComplexRational& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) {
        if (b(k, c).is_zero()) continue;
        out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

ExactMatrix operator-(const ExactMatrix& a) { return a * ComplexRational(-1); }

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

std::vector<int> row_reduce(ExactMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const ComplexRational inv = a(row, col).inverse();
    for (int c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const ComplexRational f = a(r, col);
      for (int c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<ComplexRational>> null_space(const ExactMatrix& a) {
  ExactMatrix reduced = a;
  const std::vector<int> pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<std::vector<ComplexRational>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<ComplexRational> v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(free)] = ComplexRational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -reduced(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    os << '[';
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << to_string(m(r, c));
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace rigrot
