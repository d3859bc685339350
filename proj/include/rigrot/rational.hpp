#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace rigrot {

using Rational = mpq_class;

/// num / den in lowest terms. GMP requires canonical operands.
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact double -> rational conversion (every finite double is dyadic).
Rational to_rational(double x);

/// Best rational approximation with denominator <= max_den, by continued
/// fractions. Used to propose exact eigenvalue candidates.
Rational approximate_rational(double x, long max_den);

std::string to_string(const Rational& r);

/// Parses "3/4", "-2", "0.375".
Rational parse_rational(const std::string& s);

/// a + b i with a, b rational.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  ComplexRational inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) { return *this *= o.inverse(); }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const ComplexRational& c);

}  // namespace rigrot
