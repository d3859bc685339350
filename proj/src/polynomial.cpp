#include "rigrot/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "rigrot/common.hpp"

namespace rigrot {

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  Rational r(x);  // exact for doubles
  r.canonicalize();
  return r;
}

Rational approximate_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  // Convergents h/k of the continued fraction of x.
  long double rem = x;
  mpz_class h_prev2 = 0, h_prev = 1, k_prev2 = 1, k_prev = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(rem);
    mpz_class a(static_cast<double>(a_ld));
    mpz_class h = a * h_prev + h_prev2;
    mpz_class k = a * k_prev + k_prev2;
    if (k > max_den) break;
    h_prev2 = h_prev;
    k_prev2 = k_prev;
    h_prev = h;
    k_prev = k;
    const long double frac = rem - a_ld;
    if (frac < 1e-18L) break;
    rem = 1.0L / frac;
  }
  if (k_prev == 0) return Rational(0);
  Rational r(h_prev, k_prev);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad rational: " + s);
    r.canonicalize();
    return r;
  }
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad number: " + s);
  }
  if (used != s.size()) throw Error(ErrorCode::InvalidArgument, "bad number: " + s);
  // Decimal strings denote the decimal value, not its binary rounding.
  const auto dot = s.find('.');
  if (dot == std::string::npos && s.find_first_of("eE") == std::string::npos) {
    return Rational(mpz_class(s, 10));
  }
  if (s.find_first_of("eE") == std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto scale = s.size() - dot - 1;
    mpz_class num(digits.empty() || digits == "-" ? "0" : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return to_rational(d);
}

ComplexRational ComplexRational::inverse() const {
  const Rational n = norm2();
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return {re / n, -im / n};
}

std::string to_string(const ComplexRational& c) {
  if (c.is_real()) return c.re.get_str();
  if (sgn(c.re) == 0) return c.im.get_str() + "i";
  std::string im = c.im.get_str();
  if (sgn(c.im) > 0) im = "+" + im;
  return "(" + c.re.get_str() + im + "i)";
}

namespace {

template <std::size_t N>
std::string poly_to_string(const Polynomial<N>& p, const std::array<const char*, N>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string coeff = to_string(c);
    bool is_constant = true;
    for (int k : e) is_constant = is_constant && k == 0;
    if (!first) {
      if (coeff.front() == '-') {
        os << " - ";
        coeff.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (coeff == "-1" && !is_constant) {
      os << '-';
      coeff = "1";
    }
    if (coeff != "1" || is_constant) os << coeff;
    bool need_sep = coeff != "1" && !is_constant;
    for (std::size_t k = 0; k < N; ++k) {
      if (e[k] == 0) continue;
      if (need_sep) os << '*';
      os << names[k];
      if (e[k] > 1) os << '^' << e[k];
      need_sep = true;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const Poly4& p) { return poly_to_string<4>(p, {"z1", "z2", "zb1", "zb2"}); }
std::string to_string(const Poly3& p) { return poly_to_string<3>(p, {"x", "y", "z"}); }

}  // namespace rigrot
