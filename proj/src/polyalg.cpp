#include "rigrot/polyalg.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rigrot {

namespace {

constexpr std::size_t kZ1 = 0, kZ2 = 1, kZb1 = 2, kZb2 = 3;

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class double_factorial(int n) {
  if (n <= 0) return 1;
  mpz_class f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

template <std::size_t N>
Polynomial<N> negate_odd_terms(const Polynomial<N>& f) {
  Polynomial<N> out;
  for (const auto& [e, c] : f.terms()) {
    int deg = 0;
    for (int k : e) deg += k;
    out.add_term(e, deg % 2 == 0 ? c : -c);
  }
  return out;
}

// Coordinates of each target in the basis, by exact row reduction of
// [basis | targets] over the union of their monomials.
template <std::size_t N>
std::vector<std::vector<ComplexRational>> coordinates_in_basis(
    const std::vector<Polynomial<N>>& basis, const std::vector<Polynomial<N>>& targets) {
  std::map<std::array<int, N>, int> rows;
  auto index_terms = [&](const Polynomial<N>& f) {
    for (const auto& [e, c] : f.terms()) rows.try_emplace(e, 0);
  };
  for (const auto& b : basis) index_terms(b);
  for (const auto& t : targets) index_terms(t);
  int next = 0;
  for (auto& [e, r] : rows) r = next++;

  const int n = static_cast<int>(basis.size());
  const int t = static_cast<int>(targets.size());
  ExactMatrix aug(next, n + t);
  for (int c = 0; c < n; ++c)
    for (const auto& [e, v] : basis[static_cast<std::size_t>(c)].terms()) aug(rows.at(e), c) = v;
  for (int c = 0; c < t; ++c)
    for (const auto& [e, v] : targets[static_cast<std::size_t>(c)].terms()) aug(rows.at(e), n + c) = v;

  const std::vector<int> pivots = row_reduce(aug);
  for (int k = 0; k < static_cast<int>(pivots.size()); ++k) {
    if (k >= n || pivots[static_cast<std::size_t>(k)] != k) {
      throw Error(ErrorCode::RepresentationClosure,
                  "operator image is not contained in the harmonic space");
    }
  }
  if (static_cast<int>(pivots.size()) != n) {
    throw Error(ErrorCode::RepresentationClosure, "basis is linearly dependent");
  }

  std::vector<std::vector<ComplexRational>> coords(static_cast<std::size_t>(t),
                                                   std::vector<ComplexRational>(static_cast<std::size_t>(n)));
  for (int c = 0; c < t; ++c)
    for (int r = 0; r < n; ++r) coords[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = aug(r, n + c);
  return coords;
}

template <std::size_t N>
ExactMatrix operator_in_basis(const VectorField<N>& field, const std::vector<Polynomial<N>>& basis) {
  std::vector<Polynomial<N>> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(field.apply(b));
  const auto coords = coordinates_in_basis(basis, images);
  const int n = static_cast<int>(basis.size());
  ExactMatrix m(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) m(r, c) = coords[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  return m;
}

// <f, g> on S^3 with normalized measure: E[|z1|^{2k1} |z2|^{2k2}] = k1! k2! / (k1 + k2 + 1)!.
ComplexRational pairing_s3(const Poly4& f, const Poly4& g) {
  ComplexRational acc;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      const int k1 = ef[kZ1] + eg[kZb1];
      const int k2 = ef[kZ2] + eg[kZb2];
      if (ef[kZb1] + eg[kZ1] != k1 || ef[kZb2] + eg[kZ2] != k2) continue;
      const Rational moment = make_rational(factorial(k1) * factorial(k2), factorial(k1 + k2 + 1));
      acc += cf * cg.conj() * ComplexRational(moment);
    }
  }
  return acc;
}

// <f, g> on S^2 with normalized measure:
// E[x^a y^b z^c] = (a-1)!! (b-1)!! (c-1)!! / (a+b+c+1)!! for even a, b, c.
ComplexRational pairing_s2(const Poly3& f, const Poly3& g) {
  ComplexRational acc;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      const int a = ef[0] + eg[0], b = ef[1] + eg[1], c = ef[2] + eg[2];
      if (a % 2 || b % 2 || c % 2) continue;
      Rational moment(double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1),
                      double_factorial(a + b + c + 1));
      moment.canonicalize();
      acc += cf * cg.conj() * ComplexRational(moment);
    }
  }
  return acc;
}

template <class Basis, class Pairing>
ExactMatrix gram_of(const Basis& basis, Pairing pairing) {
  const int n = static_cast<int>(basis.size());
  ExactMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g(r, c) = pairing(basis[static_cast<std::size_t>(c)], basis[static_cast<std::size_t>(r)]);
  return g;
}

void check_axis(int axis) {
  if (axis < 1 || axis > 3) throw Error(ErrorCode::InvalidArgument, "axis must be 1, 2 or 3");
}

ExactMatrix sum_of_squares(const std::array<ExactMatrix, 3>& m) {
  return m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
}

}  // namespace

Poly4 laplacian_r4(const Poly4& f) {
  Poly4 out = f.derivative(kZ1).derivative(kZb1) + f.derivative(kZ2).derivative(kZb2);
  return out * ComplexRational(4);
}

Poly3 laplacian_r3(const Poly3& f) {
  return f.derivative(0).derivative(0) + f.derivative(1).derivative(1) +
         f.derivative(2).derivative(2);
}

Poly4 antipodal(const Poly4& f) { return negate_odd_terms(f); }
Poly3 antipodal(const Poly3& f) { return negate_odd_terms(f); }

BidegreeSpace harmonic_basis(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::InvalidArgument, "bidegree must be non-negative");
  BidegreeSpace space;
  space.p = p;
  space.q = q;

  // Group the bidegree-(p,q) monomials by their l weight; the Laplacian
  // preserves l, so the kernel splits along the groups.
  std::map<int, std::vector<Poly4::Exponent>> by_weight;
  for (int a = 0; a <= p; ++a) {
    for (int c = 0; c <= q; ++c) {
      const Poly4::Exponent e{a, p - a, c, q - c};
      const int twice_l = e[kZ2] + e[kZb1] - e[kZ1] - e[kZb2];
      by_weight[twice_l].push_back(e);
    }
  }

  for (const auto& [twice_l, monomials] : by_weight) {
    std::map<Poly4::Exponent, int> target_rows;
    std::vector<Poly4> images;
    for (const auto& e : monomials) {
      images.push_back(laplacian_r4(Poly4::monomial(e)));
      for (const auto& [te, c] : images.back().terms()) target_rows.try_emplace(te, 0);
    }
    int next = 0;
    for (auto& [te, r] : target_rows) r = next++;
    ExactMatrix lap(next, static_cast<int>(monomials.size()));
    for (int c = 0; c < static_cast<int>(monomials.size()); ++c)
      for (const auto& [te, v] : images[static_cast<std::size_t>(c)].terms()) lap(target_rows.at(te), c) = v;

    const auto kernel = null_space(lap);
    if (kernel.size() != 1) {
      throw Error(ErrorCode::RepresentationClosure,
                  "harmonic weight space of H^{" + std::to_string(p) + "," + std::to_string(q) +
                      "} has dimension " + std::to_string(kernel.size()));
    }
    Poly4 h;
    for (std::size_t k = 0; k < monomials.size(); ++k) h.add_term(monomials[k], kernel[0][k]);
    space.basis.push_back(std::move(h));
    space.weights.push_back(HalfInteger::from_twice(twice_l));
  }
  return space;
}

HarmonicSpaceR3 harmonic_basis_r3(int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  HarmonicSpaceR3 space;
  space.degree = degree;
  const auto monomials = exponents_of_degree<3>(degree);
  if (degree < 2) {
    for (const auto& e : monomials) space.basis.push_back(Poly3::monomial(e));
    return space;
  }
  const auto targets = exponents_of_degree<3>(degree - 2);
  std::map<Poly3::Exponent, int> target_rows;
  for (std::size_t i = 0; i < targets.size(); ++i) target_rows[targets[i]] = static_cast<int>(i);
  ExactMatrix lap(static_cast<int>(targets.size()), static_cast<int>(monomials.size()));
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    const Poly3 image = laplacian_r3(Poly3::monomial(monomials[c]));
    for (const auto& [te, v] : image.terms()) lap(target_rows.at(te), static_cast<int>(c)) = v;
  }
  for (const auto& vec : null_space(lap)) {
    Poly3 h;
    for (std::size_t k = 0; k < monomials.size(); ++k) h.add_term(monomials[k], vec[k]);
    space.basis.push_back(std::move(h));
  }
  return space;
}

const std::array<VectorField<4>, 3>& su2_generators() {
  // X_A f(z) = d/dt f(exp(tA) z) for A_a = i sigma_a / 2; the map A -> X_A
  // reverses brackets, so [X_1, X_2] = X_3.
  static const std::array<VectorField<4>, 3> fields = [] {
    const ComplexRational half(make_rational(1, 2));
    const ComplexRational ihalf(Rational(0), make_rational(1, 2));
    const Poly4 z1 = Poly4::variable(kZ1), z2 = Poly4::variable(kZ2);
    const Poly4 zb1 = Poly4::variable(kZb1), zb2 = Poly4::variable(kZb2);
    std::array<VectorField<4>, 3> x;
    x[0].components = {ihalf * z2, ihalf * z1, -ihalf * zb2, -ihalf * zb1};
    x[1].components = {half * z2, -half * z1, half * zb2, -half * zb1};
    x[2].components = {ihalf * z1, -ihalf * z2, -ihalf * zb1, ihalf * zb2};
    return x;
  }();
  return fields;
}

const std::array<VectorField<3>, 3>& so3_generators() {
  // X_1 = z d_y - y d_z and cyclic.
  static const std::array<VectorField<3>, 3> fields = [] {
    const Poly3 x = Poly3::variable(0), y = Poly3::variable(1), z = Poly3::variable(2);
    const ComplexRational minus(-1);
    std::array<VectorField<3>, 3> f;
    f[0].components = {Poly3(), z, y * minus};
    f[1].components = {z * minus, Poly3(), x};
    f[2].components = {y, x * minus, Poly3()};
    return f;
  }();
  return fields;
}

ExactMatrix gram_matrix(const BidegreeSpace& space) { return gram_of(space.basis, pairing_s3); }
ExactMatrix gram_matrix(const HarmonicSpaceR3& space) { return gram_of(space.basis, pairing_s2); }

bool is_self_adjoint(const ExactMatrix& a, const ExactMatrix& gram) {
  return gram * a == a.adjoint() * gram;
}

bool is_skew_adjoint(const ExactMatrix& a, const ExactMatrix& gram) {
  return gram * a == -(a.adjoint() * gram);
}

namespace {

template <class Space>
OperatorMatrix tag(ExactMatrix m, const Space& space, const ExactMatrix& gram) {
  OperatorMatrix op;
  if constexpr (std::is_same_v<Space, BidegreeSpace>) {
    op.space = SpaceKind::Bidegree;
    op.p = space.p;
    op.q = space.q;
  } else {
    op.space = SpaceKind::HarmonicR3;
    op.p = space.degree;
    op.q = 0;
  }
  op.skew_adjoint = is_skew_adjoint(m, gram);
  op.self_adjoint = is_self_adjoint(m, gram);
  op.matrix = std::move(m);
  return op;
}

template <class Space, std::size_t N>
std::array<ExactMatrix, 3> all_generators(const Space& space,
                                          const std::array<VectorField<N>, 3>& fields) {
  return {operator_in_basis(fields[0], space.basis), operator_in_basis(fields[1], space.basis),
          operator_in_basis(fields[2], space.basis)};
}

}  // namespace

OperatorMatrix generator_matrix(int axis, const BidegreeSpace& space) {
  check_axis(axis);
  return tag(operator_in_basis(su2_generators()[static_cast<std::size_t>(axis - 1)], space.basis),
             space, gram_matrix(space));
}

OperatorMatrix generator_matrix(int axis, const HarmonicSpaceR3& space) {
  check_axis(axis);
  return tag(operator_in_basis(so3_generators()[static_cast<std::size_t>(axis - 1)], space.basis),
             space, gram_matrix(space));
}

OperatorMatrix casimir_matrix(const BidegreeSpace& space) {
  return tag(-sum_of_squares(all_generators(space, su2_generators())), space, gram_matrix(space));
}

OperatorMatrix casimir_matrix(const HarmonicSpaceR3& space) {
  return tag(-sum_of_squares(all_generators(space, so3_generators())), space, gram_matrix(space));
}

OperatorMatrix angular_momentum_z(const BidegreeSpace& space) {
  return tag(operator_in_basis(su2_generators()[2], space.basis) * ComplexRational::i(), space,
             gram_matrix(space));
}

OperatorMatrix hamiltonian_matrix(const BidegreeSpace& space, const Rational& i1,
                                  const Rational& i2, const Rational& i3, const Rational& hbar,
                                  const Rational& shift) {
  if (sgn(i1) <= 0 || sgn(i2) <= 0 || sgn(i3) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "principal momenta must be positive");
  }
  const auto m = all_generators(space, su2_generators());
  const Rational half_hbar = hbar / 2;
  ExactMatrix h = m[0] * m[0] * ComplexRational(Rational(-half_hbar / i1)) +
                  m[1] * m[1] * ComplexRational(Rational(-half_hbar / i2)) +
                  m[2] * m[2] * ComplexRational(Rational(-half_hbar / i3));
  h += ExactMatrix::scalar(space.dimension(), ComplexRational(shift));
  OperatorMatrix op = tag(std::move(h), space, gram_matrix(space));
  if (!op.self_adjoint) throw Error(ErrorCode::NotSelfAdjoint, "Hamiltonian is not self-adjoint");
  return op;
}

OperatorMatrix hamiltonian_matrix(const HarmonicSpaceR3& space, const Rational& transverse,
                                  const Rational& hbar, const Rational& shift) {
  if (sgn(transverse) <= 0) throw Error(ErrorCode::InvalidArgument, "momentum must be positive");
  const auto m = all_generators(space, so3_generators());
  ExactMatrix h = sum_of_squares(m) * ComplexRational(Rational(-hbar / (2 * transverse)));
  h += ExactMatrix::scalar(space.dimension(), ComplexRational(shift));
  OperatorMatrix op = tag(std::move(h), space, gram_matrix(space));
  if (!op.self_adjoint) throw Error(ErrorCode::NotSelfAdjoint, "Hamiltonian is not self-adjoint");
  return op;
}

Poly4 combine(const BidegreeSpace& space, const std::vector<ComplexRational>& coords) {
  Poly4 out;
  for (std::size_t k = 0; k < coords.size() && k < space.basis.size(); ++k) {
    out += space.basis[k] * coords[k];
  }
  return out;
}

}  // namespace rigrot
