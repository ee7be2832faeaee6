#include "normbasis/ideals.hpp"

#include <numeric>

namespace normbasis {

namespace {

FractionalIdeal canonical(const NumberField& field, const std::vector<RatVector>& rows) {
  const std::size_t n = field.degree();
  Integer den = 1;
  for (const auto& r : rows) {
    const Integer d = common_denominator(r);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = rows[i][j] * den;
      m(i, j) = v.get_num();
    }
  const HnfResult h = hnf(m);
  if (h.rank == 0) throw Error(ErrorCode::ZeroIdeal, "ideal generated by zero");
  if (h.rank < n) throw Error(ErrorCode::NotClosed, "module does not have full rank");
  FractionalIdeal out;
  out.hnf = IntMatrix(n, n);
  Integer g = den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.hnf(i, j) = h.h(i, j);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.h(i, j).get_mpz_t());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.hnf(i, j) /= g;
  out.den = den / g;
  return out;
}

void check_closed(const NumberField& field, const FractionalIdeal& a) {
  const auto basis = ideal_basis(field, a);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < field.degree(); ++j)
      if (!ideal_contains(field, a, field.mul(basis[i], field.basis_element(j))))
        throw Error(ErrorCode::NotClosed, "ideal row " + std::to_string(i) + " times basis element " + std::to_string(j) +
                                              " leaves the module");
}

}  // namespace

FractionalIdeal unit_ideal(const NumberField& field) {
  return FractionalIdeal{IntMatrix::identity(field.degree()), Integer(1)};
}

FractionalIdeal ideal_from_generators(const NumberField& field, const std::vector<FieldElement>& gens) {
  std::vector<RatVector> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (std::size_t j = 0; j < field.degree(); ++j)
      rows.push_back(field.integral_coords(field.mul(g, field.basis_element(j))));
  }
  if (rows.empty()) throw Error(ErrorCode::ZeroIdeal, "no nonzero generator");
  FractionalIdeal out = canonical(field, rows);
  check_closed(field, out);
  return out;
}

FractionalIdeal ideal_from_module(const NumberField& field, const std::vector<FieldElement>& elems) {
  std::vector<RatVector> rows;
  for (const auto& e : elems)
    if (!e.is_zero()) rows.push_back(field.integral_coords(e));
  if (rows.empty()) throw Error(ErrorCode::ZeroIdeal, "no nonzero element");
  FractionalIdeal out = canonical(field, rows);
  check_closed(field, out);
  return out;
}

FractionalIdeal ideal_mul(const NumberField& field, const FractionalIdeal& a, const FractionalIdeal& b) {
  const auto ba = ideal_basis(field, a), bb = ideal_basis(field, b);
  std::vector<FieldElement> prods;
  for (const auto& x : ba)
    for (const auto& y : bb) prods.push_back(field.mul(x, y));
  return ideal_from_module(field, prods);
}

FractionalIdeal ideal_scale(const NumberField& field, const FractionalIdeal& a, const Rational& c) {
  if (c == 0) throw Error(ErrorCode::ZeroIdeal, "scaling by zero");
  std::vector<RatVector> rows;
  for (const auto& x : ideal_basis(field, a)) rows.push_back(field.integral_coords(c * x));
  return canonical(field, rows);
}

Rational ideal_norm(const NumberField& field, const FractionalIdeal& a) {
  Integer d = 1;
  for (std::size_t i = 0; i < field.degree(); ++i) d *= a.hnf(i, i);
  Integer dn = 1;
  mpz_pow_ui(dn.get_mpz_t(), a.den.get_mpz_t(), field.degree());
  return make_rational(abs(d), dn);
}

std::vector<FieldElement> ideal_basis(const NumberField& field, const FractionalIdeal& a) {
  std::vector<FieldElement> out;
  const std::size_t n = field.degree();
  for (std::size_t i = 0; i < n; ++i) {
    RatVector c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = make_rational(a.hnf(i, j), a.den);
    out.push_back(field.from_integral(std::span<const Rational>(c)));
  }
  return out;
}

RatVector ideal_coords(const NumberField& field, const FractionalIdeal& a, const FieldElement& x) {
  // upper-triangular hnf: solve c * hnf = den * coords by forward substitution on columns
  const std::size_t n = field.degree();
  RatVector target = field.integral_coords(x);
  for (auto& t : target) t *= a.den;
  RatVector c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = target[j];
    for (std::size_t i = 0; i < j; ++i) acc -= c[i] * a.hnf(i, j);
    c[j] = acc / Rational(a.hnf(j, j));
  }
  return c;
}

bool ideal_contains(const NumberField& field, const FractionalIdeal& a, const FieldElement& x) {
  const RatVector c = ideal_coords(field, a, x);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
}

}  // namespace normbasis
