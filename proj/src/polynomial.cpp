#include <algorithm>
#include <sstream>

#include "normbasis/exact.hpp"

namespace normbasis {

UniPoly::UniPoly(RatVector coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(RatVector{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  RatVector v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::BadParameter, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool UniPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  RatVector d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly m = *this;
  m *= 1 / leading();
  return m;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) {
      os << normbasis::to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

PolyDivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::BadParameter, "polynomial division by zero");
  RatVector r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  RatVector q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = r[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
  if (a.degree() < b.degree()) return a;
  return divmod(a, b).remainder;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly poly_pow(const UniPoly& a, unsigned k) {
  UniPoly acc = UniPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

namespace {

void require_monic(const UniPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorCode::NonMonicModulus, "modulus must be monic of degree >= 1");
}

}  // namespace

UniPoly poly_mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& f) {
  require_monic(f);
  return poly_rem(a * b, f);
}

UniPoly poly_inv_mod(const UniPoly& a, const UniPoly& f) {
  require_monic(f);
  // Extended Euclid tracking only the cofactor of a.
  UniPoly r0 = f, r1 = poly_rem(a, f);
  UniPoly s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::NotInvertible, "gcd with the modulus is " + r0.monic().to_string());
  return poly_rem(s0 * (1 / r0.leading()), f);
}

UniPoly compose_mod(const UniPoly& p, const UniPoly& g, const UniPoly& f) {
  require_monic(f);
  const UniPoly gr = poly_rem(g, f);
  UniPoly acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = poly_rem(acc * gr, f);
    acc += UniPoly::constant(p.coeff(static_cast<std::size_t>(k)));
  }
  return acc;
}

Rational poly_discriminant(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::BadParameter, "discriminant of a constant");
  if (n == 1) return 1;
  const UniPoly df = f.derivative();
  const int m = df.degree();
  const std::size_t size = static_cast<std::size_t>(n + m);
  RatMatrix s(size, size);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = f.coeff(static_cast<std::size_t>(n - j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(static_cast<std::size_t>(m + i), static_cast<std::size_t>(i + j)) = df.coeff(static_cast<std::size_t>(m - j));
  const Rational res = det_exact(s);
  const bool neg = ((n * (n - 1) / 2) % 2) != 0;
  return (neg ? -res : res) / f.leading();
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = -poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(sign_of(p.eval(x)));
  return variations(s);
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int count_real_roots(const UniPoly& f) {
  const auto chain = sturm_chain(f);
  std::vector<int> at_neg, at_pos;
  for (const auto& p : chain) {
    const int s = sign_of(p.leading());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return variations(at_neg) - variations(at_pos);
}

std::vector<Integer> integer_roots(const UniPoly& f) {
  std::vector<Integer> roots;
  if (f.degree() < 1) return roots;
  // Cauchy bound 1 + max |c_k / lead|.
  Rational bound = 0;
  for (int k = 0; k < f.degree(); ++k) bound = std::max(bound, Rational(abs(f.coeff(static_cast<std::size_t>(k)) / f.leading())));
  const Rational b2 = bound + 2;
  const Integer b = b2.get_num() / b2.get_den();
  const auto chain = sturm_chain(f);

  struct Range { Rational lo, hi; };  // half-open (lo, hi]
  std::vector<Range> work{{Rational(-b), Rational(b)}};
  while (!work.empty()) {
    Range r = work.back();
    work.pop_back();
    const int c = sturm_count(chain, r.lo, r.hi);
    if (c == 0) continue;
    if (r.hi - r.lo < 1) {
      Integer k;
      const Rational lo = r.lo;
      mpz_fdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      for (Integer cand = k + 1; cand <= r.hi; ++cand)
        if (f.eval(Rational(cand)) == 0) roots.push_back(cand);
      continue;
    }
    const Rational mid = (r.lo + r.hi) / 2;
    work.push_back({r.lo, mid});
    work.push_back({mid, r.hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace normbasis
