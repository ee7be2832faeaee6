// Classical integral bases, re-verified on construction.

#include <charconv>
#include <string>

#include "normbasis/number_field.hpp"

namespace normbasis {

namespace {

bool squarefree(long d) {
  long a = d < 0 ? -d : d;
  if (a == 0) return false;
  for (long p = 2; p * p <= a; ++p) {
    if (a % (p * p) == 0) return false;
    while (a % p == 0) a /= p;
  }
  return true;
}

long gcd_l(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long mod4(long d) { return ((d % 4) + 4) % 4; }

RatMatrix rows_to_matrix(const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Smallest ring containing the Z-span of `rows` (all inside O_K).
RatMatrix ring_closure(const UniPoly& f, RatMatrix basis) {
  const auto n = static_cast<std::size_t>(f.degree());
  for (;;) {
    const RatMatrix inv = inverse(basis);
    std::vector<RatVector> rows;
    bool closed = true;
    for (std::size_t i = 0; i < n; ++i) {
      rows.emplace_back(basis.row(i).begin(), basis.row(i).end());
      for (std::size_t j = i; j < n; ++j) {
        const UniPoly p = poly_mul_mod(UniPoly(RatVector(basis.row(i).begin(), basis.row(i).end())),
                                       UniPoly(RatVector(basis.row(j).begin(), basis.row(j).end())), f);
        RatVector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = p.coeff(k);
        const RatVector c = row_times(v, inv);
        for (const auto& q : c)
          if (!is_integer(q)) closed = false;
        rows.push_back(std::move(v));
      }
    }
    if (closed) return basis;
    basis = module_basis(rows_to_matrix(rows));
  }
}

}  // namespace

UniPoly cyclotomic_polynomial(long m) {
  if (m < 1) throw Error(ErrorCode::BadParameter, "cyclotomic index must be positive");
  UniPoly p = UniPoly::monomial(1, static_cast<std::size_t>(m)) - UniPoly::constant(1);
  for (long d = 1; d < m; ++d)
    if (m % d == 0) p = divmod(p, cyclotomic_polynomial(d)).quotient;
  return p;
}

NumberField quadratic_field(long d) {
  if (d == 0 || d == 1 || !squarefree(d)) throw Error(ErrorCode::BadParameter, "quadratic(d) needs squarefree d != 0, 1");
  FieldSpec spec;
  spec.poly = UniPoly(RatVector{Rational(-d), 0, 1});
  if (mod4(d) == 1)
    spec.basis = rows_to_matrix({{1, 0}, {Rational(1, 2), Rational(1, 2)}});
  else
    spec.basis = RatMatrix::identity(2);
  spec.label = "quadratic(" + std::to_string(d) + ")";
  spec.maximal = true;
  return NumberField::make(spec);
}

NumberField cyclotomic_field(long m) {
  if (m < 3 || m % 4 == 2) throw Error(ErrorCode::BadParameter, "cyclotomic(m) needs m >= 3, m != 2 mod 4");
  FieldSpec spec;
  spec.poly = cyclotomic_polynomial(m);
  spec.label = "cyclotomic(" + std::to_string(m) + ")";
  spec.maximal = true;
  return NumberField::make(spec);
}

NumberField biquadratic_field(long a, long b) {
  if (a == b || !squarefree(a) || !squarefree(b) || a == 1 || b == 1)
    throw Error(ErrorCode::BadParameter, "biquadratic(a,b) needs distinct squarefree a, b != 0, 1");
  const long g = gcd_l(a, b);
  const long k = (a / g) * (b / g);
  if (k == 1) throw Error(ErrorCode::BadParameter, "biquadratic(a,b) degenerates to a quadratic field");
  // theta = sqrt(a) + sqrt(b): theta^4 - 2(a+b) theta^2 + (a-b)^2
  FieldSpec spec;
  spec.poly = UniPoly(RatVector{Rational((a - b) * (a - b)), 0, Rational(-2 * (a + b)), 0, 1});
  // sqrt(a) = (theta^3 - (3a+b) theta) / (2(b-a)), sqrt(b) = theta - sqrt(a),
  // sqrt(a) sqrt(b) = (theta^2 - a - b) / 2, sqrt(k) = sqrt(a) sqrt(b) / g
  const Rational c = Rational(1, 2 * (b - a));
  const RatVector sa{0, Rational(-(3 * a + b)) * c, 0, c};
  const RatVector sb{0, 1 - sa[1], 0, -sa[3]};
  const RatVector sk{Rational(-(a + b), 2 * g), 0, Rational(1, 2 * g), 0};
  RatMatrix basis = module_basis(rows_to_matrix({{1, 0, 0, 0}, sa, sb, sk}));

  // The index of Z[sqrt a, sqrt b, sqrt k] in O_K is a power of 2: adjoin
  // integral halves until none is left.
  for (bool grew = true; grew;) {
    grew = false;
    const NumberField cur = NumberField::make(FieldSpec{spec.poly, basis, "", false});
    for (unsigned mask = 1; mask < 16 && !grew; ++mask) {
      FieldElement y = cur.zero();
      for (std::size_t i = 0; i < 4; ++i)
        if (mask & (1u << i)) y += cur.basis_element(i);
      y *= Rational(1, 2);
      if (cur.in_order(y) || !cur.is_algebraic_integer(y)) continue;
      std::vector<RatVector> rows;
      for (std::size_t i = 0; i < 4; ++i) rows.emplace_back(basis.row(i).begin(), basis.row(i).end());
      rows.push_back(y.coords());
      basis = ring_closure(spec.poly, module_basis(rows_to_matrix(rows)));
      grew = true;
    }
  }
  spec.basis = basis;
  spec.label = "biquadratic(" + std::to_string(a) + "," + std::to_string(b) + ")";
  spec.maximal = true;
  return NumberField::make(spec);
}

NumberField catalog_field(std::string_view name) {
  const auto open = name.find('(');
  const auto close = name.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw Error(ErrorCode::ParseError, "catalog name must look like kind(args): '" + std::string(name) + "'");
  const std::string_view kind = name.substr(0, open);
  std::string_view args = name.substr(open + 1, close - open - 1);
  std::vector<long> vals;
  while (!args.empty()) {
    const auto comma = args.find(',');
    std::string_view tok = args.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::ParseError, "bad catalog argument '" + std::string(tok) + "'");
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (kind == "quadratic" && vals.size() == 1) return quadratic_field(vals[0]);
  if (kind == "cyclotomic" && vals.size() == 1) return cyclotomic_field(vals[0]);
  if (kind == "biquadratic" && vals.size() == 2) return biquadratic_field(vals[0], vals[1]);
  throw Error(ErrorCode::BadParameter, "unknown catalog field '" + std::string(name) + "'");
}

}  // namespace normbasis
