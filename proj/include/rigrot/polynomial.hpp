#pragma once

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rigrot/rational.hpp"

namespace rigrot {

/// Sparse polynomial in N variables with exact complex-rational coefficients.
/// Zero coefficients are never stored.
template <std::size_t N>
class Polynomial {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, ComplexRational>;

  Polynomial() = default;

  static Polynomial constant(const ComplexRational& c) {
    Polynomial p;
    p.add_term(Exponent{}, c);
    return p;
  }

  static Polynomial monomial(const Exponent& e, const ComplexRational& c = ComplexRational(1)) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  static Polynomial variable(std::size_t k) {
    Exponent e{};
    e[k] = 1;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const ComplexRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ComplexRational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ComplexRational() : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const ComplexRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const ComplexRational& s) { return a *= s; }
  friend Polynomial operator*(const ComplexRational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{};
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Partial derivative with respect to variable k.
  Polynomial derivative(std::size_t k) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponent d = e;
      d[k] -= 1;
      out.add_term(d, c * ComplexRational(static_cast<long>(e[k])));
    }
    return out;
  }

  std::complex<double> evaluate(std::span<const std::complex<double>, N> x) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> term = c.to_complex();
      for (std::size_t k = 0; k < N; ++k) {
        for (int p = 0; p < e[k]; ++p) term *= x[k];
      }
      acc += term;
    }
    return acc;
  }

 private:
  Terms terms_;
};

/// First-order differential operator sum_k components[k] * d/dx_k.
template <std::size_t N>
struct VectorField {
  std::array<Polynomial<N>, N> components;

  Polynomial<N> apply(const Polynomial<N>& f) const {
    Polynomial<N> out;
    for (std::size_t k = 0; k < N; ++k) {
      if (components[k].is_zero()) continue;
      out += components[k] * f.derivative(k);
    }
    return out;
  }
};

/// All exponents with the given total degree, in descending lexicographic order.
template <std::size_t N>
std::vector<std::array<int, N>> exponents_of_degree(int degree) {
  std::vector<std::array<int, N>> out;
  std::array<int, N> e{};
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k + 1 == N) {
      e[k] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[k] = v;
      self(self, k + 1, remaining - v);
    }
  };
  if constexpr (N > 0) rec(rec, 0, degree);
  return out;
}

// Variables of C^2 ~ R^4: (z1, z2, conj z1, conj z2).
using Poly4 = Polynomial<4>;
// Variables of R^3: (x, y, z).
using Poly3 = Polynomial<3>;

std::string to_string(const Poly4& p);
std::string to_string(const Poly3& p);

}  // namespace rigrot
