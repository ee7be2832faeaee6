#include "normbasis/number_field.hpp"

#include <algorithm>

namespace normbasis {

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + (coords_.empty() ? 0 : 1), coords_.end(),
                     [](const Rational& q) { return q == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.size() != size()) throw Error(ErrorCode::BadParameter, "element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (o.size() != size()) throw Error(ErrorCode::BadParameter, "element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& q : coords_) q *= c;
  return *this;
}

namespace {

RatVector padded(const UniPoly& p, std::size_t n) {
  RatVector v(n);
  for (std::size_t k = 0; k < n && k < p.coeffs().size(); ++k) v[k] = p.coeffs()[k];
  return v;
}

// Newton identities: power sums of the roots of a monic f, k = 0..count-1.
RatVector power_sums(const UniPoly& f, std::size_t count) {
  const auto n = static_cast<std::size_t>(f.degree());
  RatVector p(count);
  if (count == 0) return p;
  p[0] = static_cast<long>(n);
  // f = x^n + c_{n-1} x^{n-1} + ... + c_0; write a_i = c_{n-i}
  auto a = [&](std::size_t i) { return i <= n ? f.coeff(n - i) : Rational(0); };
  for (std::size_t k = 1; k < count; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i < k && i <= n; ++i) s += a(i) * p[k - i];
    if (k <= n) s += a(k) * static_cast<long>(k);
    p[k] = -s;
  }
  return p;
}

// f(x + a) is Eisenstein at p.
bool shifted_eisenstein(const UniPoly& f, long a, const Integer& p) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<Integer> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = f.coeff(k).get_num();
  // Taylor shift by repeated synthetic division
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = n - 1; k + 1 > i; --k) c[k] += a * c[k + 1];
  for (std::size_t k = 0; k < n; ++k)
    if (c[k] % p != 0) return false;
  return c[0] % (p * p) != 0;
}

// Sufficient test that the order is maximal: every prime whose square divides
// the discriminant is handled by an Eisenstein shift of f (power basis only).
bool known_maximal(const UniPoly& f, const Integer& disc, bool power_basis) {
  Integer a = abs(disc);
  if (a == 0 || a > Integer("1000000000000")) return false;  // too large to trial-divide cheaply
  for (Integer p = 2; p * p <= a; ++p) {
    if (a % p != 0) continue;
    int e = 0;
    while (a % p == 0) {
      a /= p;
      ++e;
    }
    if (e < 2) continue;
    if (!power_basis || p > 1000) return false;
    bool ok = false;
    for (long s = 0; s < p.get_si() && !ok; ++s) ok = shifted_eisenstein(f, s, p);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

RatMatrix module_basis(const RatMatrix& rows) {
  const std::size_t n = rows.cols();
  Integer den = 1;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const Integer l = common_denominator(rows.row(i));
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  // reversed columns so that the row-style HNF pivots on the top degree first
  IntMatrix m(rows.rows(), n);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = rows(i, j) * den;
      m(i, n - 1 - j) = t.get_num();
    }
  const HnfResult h = hnf(m);
  if (h.rank != n) throw Error(ErrorCode::NotAnOrder, "module does not have full rank");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(n - 1 - i, j) = make_rational(h.h(i, n - 1 - j), den);
  return out;
}

Integer verify_integral_basis(const UniPoly& f, const RatMatrix& basis) {
  if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorCode::BadParameter, "defining polynomial must be monic");
  const auto n = static_cast<std::size_t>(f.degree());
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorCode::NotAnOrder, "basis must be n x n");
  if (det_exact(basis) == 0) throw Error(ErrorCode::NotAnOrder, "basis is singular");
  const RatMatrix inv = inverse(basis);

  RatVector one(n);
  one[0] = 1;
  const RatVector c1 = row_times(one, inv);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_integer(c1[i])) throw Error(ErrorCode::NotAnOrder, "1 is not an integral combination of the basis");

  const RatVector traces = power_sums(f, n);
  auto trace = [&](const UniPoly& p) {
    Rational t = 0;
    for (std::size_t k = 0; k < n; ++k) t += p.coeff(k) * traces[k];
    return t;
  };
  std::vector<UniPoly> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(RatVector(basis.row(i).begin(), basis.row(i).end()));

  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const UniPoly prod = poly_mul_mod(e[i], e[j], f);
      const RatVector c = row_times(padded(prod, n), inv);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_integer(c[k]))
          throw Error(ErrorCode::NotAnOrder, "product e" + std::to_string(i) + "*e" + std::to_string(j) +
                                                 " leaves the lattice (coordinate " + std::to_string(k) + ")");
      const Rational t = trace(prod);
      if (!is_integer(t))
        throw Error(ErrorCode::NotAnOrder, "trace of e" + std::to_string(i) + "*e" + std::to_string(j) + " is not an integer");
      gram(i, j) = gram(j, i) = t;
    }
  const Rational d = det_exact(gram);
  return d.get_num();
}

NumberField NumberField::make(const FieldSpec& spec) {
  const UniPoly& f = spec.poly;
  if (f.degree() < 1) throw Error(ErrorCode::BadParameter, "defining polynomial must have degree >= 1");
  if (!f.is_monic() || !f.has_integer_coeffs())
    throw Error(ErrorCode::BadParameter, "defining polynomial must be monic with integer coefficients");
  if (poly_gcd(f, f.derivative()).degree() != 0) throw Error(ErrorCode::NotSquarefree, f.to_string() + " has a repeated factor");
  const auto n = static_cast<std::size_t>(f.degree());
  if (n >= 2) {
    const auto roots = integer_roots(f);
    if (!roots.empty())
      throw Error(ErrorCode::ReduciblePolynomial, f.to_string() + " has the rational root " + roots.front().get_str());
  }

  NumberField k;
  k.poly_ = f;
  k.n_ = n;
  k.r1_ = static_cast<std::size_t>(count_real_roots(f));
  k.r2_ = (n - k.r1_) / 2;
  k.label_ = spec.label;
  k.power_traces_ = power_sums(f, n);

  RatMatrix basis = spec.basis ? *spec.basis : RatMatrix::identity(n);
  Integer disc = verify_integral_basis(f, basis);
  RatVector one(n);
  one[0] = 1;
  if (RatVector(basis.row(0).begin(), basis.row(0).end()) != one) {
    basis = module_basis(basis);
    disc = verify_integral_basis(f, basis);
  }
  if (disc == 0) throw Error(ErrorCode::NotAnOrder, "zero discriminant");
  k.basis_ = basis;
  k.basis_inv_ = normbasis::inverse(basis);
  k.disc_ = disc;
  k.maximal_ = spec.maximal || n == 1 || known_maximal(f, disc, Rational(disc) == poly_discriminant(f));
  return k;
}

FieldSpec NumberField::spec() const { return FieldSpec{poly_, basis_, label_, maximal_}; }

void NumberField::check_size(const FieldElement& a) const {
  if (a.size() != n_) throw Error(ErrorCode::BadParameter, "element does not belong to this field");
}

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::theta() const {
  if (n_ == 1) return FieldElement(RatVector{-poly_.coeff(0)});
  RatVector v(n_);
  v[1] = 1;
  return FieldElement(std::move(v));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  RatVector v(n_);
  v[0] = q;
  return FieldElement(std::move(v));
}

FieldElement NumberField::from_poly(const UniPoly& p) const { return FieldElement(padded(poly_rem(p, poly_), n_)); }

FieldElement NumberField::basis_element(std::size_t i) const {
  return FieldElement(RatVector(basis_.row(i).begin(), basis_.row(i).end()));
}

FieldElement NumberField::from_integral(std::span<const Rational> coords) const {
  if (coords.size() != n_) throw Error(ErrorCode::BadParameter, "integral coordinate length mismatch");
  return FieldElement(row_times(coords, basis_));
}

FieldElement NumberField::from_integral(std::span<const Integer> coords) const {
  RatVector q(coords.begin(), coords.end());
  return from_integral(std::span<const Rational>(q));
}

RatVector NumberField::integral_coords(const FieldElement& a) const {
  check_size(a);
  return row_times(a.coords(), basis_inv_);
}

bool NumberField::in_order(const FieldElement& a) const {
  const RatVector c = integral_coords(a);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  check_size(a);
  check_size(b);
  if (n_ == 1) return FieldElement(RatVector{a[0] * b[0]});
  return FieldElement(padded(poly_mul_mod(a.to_poly(), b.to_poly(), poly_), n_));
}

FieldElement NumberField::pow(const FieldElement& a, unsigned k) const {
  FieldElement acc = one(), base = a;
  while (k > 0) {
    if (k & 1u) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

FieldElement NumberField::inverse(const FieldElement& a) const {
  check_size(a);
  if (a.is_zero()) throw Error(ErrorCode::BadParameter, "inverse of zero");
  if (n_ == 1) return from_rational(1 / a[0]);
  try {
    return FieldElement(padded(poly_inv_mod(a.to_poly(), poly_), n_));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInvertible)
      throw Error(ErrorCode::ReduciblePolynomial, poly_.to_string() + " is reducible (" + e.what() + ")");
    throw;
  }
}

Rational NumberField::trace(const FieldElement& a) const {
  check_size(a);
  Rational t = 0;
  for (std::size_t k = 0; k < n_; ++k) t += a[k] * power_traces_[k];
  return t;
}

RatMatrix NumberField::multiplication_matrix(const FieldElement& a) const {
  check_size(a);
  RatMatrix m(n_, n_);
  FieldElement col = a;
  const FieldElement x = theta();
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) m(i, j) = col[i];
    if (j + 1 < n_) col = mul(col, x);
  }
  return m;
}

Rational NumberField::norm(const FieldElement& a) const { return det_exact(multiplication_matrix(a)); }

UniPoly NumberField::characteristic_polynomial(const FieldElement& a) const {
  check_size(a);
  // power sums p_k = Tr(a^k), then elementary symmetric functions by Newton
  RatVector p(n_ + 1);
  FieldElement ak = one();
  for (std::size_t k = 1; k <= n_; ++k) {
    ak = mul(ak, a);
    p[k] = trace(ak);
  }
  RatVector e(n_ + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n_; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * p[i];
      if (i % 2 == 1) s += term; else s -= term;
    }
    e[k] = s / static_cast<long>(k);
  }
  RatVector c(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) c[n_ - k] = (k % 2 == 0) ? e[k] : Rational(-e[k]);
  return UniPoly(std::move(c));
}

UniPoly NumberField::minimal_polynomial(const FieldElement& a) const {
  check_size(a);
  std::vector<RatVector> powers{one().coords()};
  RationalEchelon ech(n_);
  ech.insert(powers.back());
  FieldElement cur = one();
  for (std::size_t m = 1; m <= n_; ++m) {
    cur = mul(cur, a);
    if (ech.insert(cur.coords())) {
      powers.push_back(cur.coords());
      continue;
    }
    // a^m = sum c_i a^i: solve the Gram system of the independent powers
    RatMatrix gram(m, m);
    RatVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n_; ++k) gram(i, j) += powers[i][k] * powers[j][k];
      for (std::size_t k = 0; k < n_; ++k) rhs[i] += powers[i][k] * cur[k];
    }
    const RatVector c = solve_linear(gram, rhs);
    RatVector coeffs(m + 1);
    for (std::size_t i = 0; i < m; ++i) coeffs[i] = -c[i];
    coeffs[m] = 1;
    UniPoly mp(std::move(coeffs));
    if (n_ % m != 0 || characteristic_polynomial(a) != poly_pow(mp, static_cast<unsigned>(n_ / m)))
      throw Error(ErrorCode::InternalNonField,
                  "minimal polynomial " + mp.to_string() + " is incompatible with an irreducible " + poly_.to_string());
    return mp;
  }
  throw Error(ErrorCode::InternalNonField, "no dependency among the first n+1 powers");
}

bool NumberField::is_algebraic_integer(const FieldElement& a) const {
  return characteristic_polynomial(a).has_integer_coeffs();
}

}  // namespace normbasis
