#include "normbasis/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace normbasis {

unsigned max_precision_bits() {
  static const unsigned bits = [] {
    const char* env = std::getenv("NORMBASIS_MAX_BITS");
    if (env == nullptr) return 4096u;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v < 64) return 4096u;
    return static_cast<unsigned>(std::min<long>(v, 1L << 20));
  }();
  return bits;
}

namespace {

mpfr_prec_t prec_of(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

// min and max of four candidate products, rounded outward
void mul_bounds(Real& lo, Real& hi, const Interval& a, const Interval& b) {
  mpfr_srcptr xs[2] = {a.lo().get(), a.hi().get()};
  mpfr_srcptr ys[2] = {b.lo().get(), b.hi().get()};
  Real t(lo.prec());
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
}

std::string render(mpfr_srcptr x, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  const auto digits = static_cast<std::size_t>(
      std::min<double>(50.0, std::ceil(static_cast<double>(mpfr_get_prec(x)) * 0.30103) + 2));
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, x, rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!s.empty() && s.front() == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  std::string out = sign + s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  if (exp - 1 != 0) out += "e" + std::to_string(static_cast<long>(exp - 1));
  return out;
}

}  // namespace

Interval Interval::point(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::point(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::parse(const std::string& lo, const std::string& hi, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_.get(), lo.c_str(), 10, MPFR_RNDD) != 0)
    throw Error(ErrorCode::ParseError, "bad interval endpoint '" + lo + "'");
  if (mpfr_set_str(r.hi_.get(), hi.c_str(), 10, MPFR_RNDU) != 0)
    throw Error(ErrorCode::ParseError, "bad interval endpoint '" + hi + "'");
  return r;
}

Real Interval::mid() const {
  Real m(prec() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

double Interval::mid_d() const { return mid().to_double(); }

Interval Interval::width() const {
  Interval w(prec());
  mpfr_sub(w.lo_.get(), hi_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sub(w.hi_.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::overlaps(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.hi_.get()) && mpfr_lessequal_p(o.lo_.get(), hi_.get());
}

bool Interval::subset_of(const Interval& o) const {
  return mpfr_greaterequal_p(lo_.get(), o.lo_.get()) && mpfr_lessequal_p(hi_.get(), o.hi_.get());
}

std::string Interval::lo_str() const { return render(lo_.get(), MPFR_RNDD); }
std::string Interval::hi_str() const { return render(hi_.get(), MPFR_RNDU); }
std::string Interval::to_string() const { return "[" + lo_str() + ", " + hi_str() + "]"; }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_add(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_sub(r.lo().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(r.hi().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mul_bounds(r.lo(), r.hi(), a, b);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorCode::PrecisionExhausted, "interval division by an interval containing zero");
  Interval inv(b.prec());
  mpfr_ui_div(inv.lo().get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi().get(), 1, b.lo().get(), MPFR_RNDU);
  return a * inv;
}

Interval mul_si(const Interval& a, long k) {
  Interval r(a.prec());
  if (k >= 0) {
    mpfr_mul_si(r.lo().get(), a.lo().get(), k, MPFR_RNDD);
    mpfr_mul_si(r.hi().get(), a.hi().get(), k, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo().get(), a.hi().get(), k, MPFR_RNDD);
    mpfr_mul_si(r.hi().get(), a.lo().get(), k, MPFR_RNDU);
  }
  return r;
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) >= 0) return a;
  if (mpfr_sgn(a.hi().get()) <= 0) return -a;
  Interval r(a.prec());
  mpfr_set_zero(r.lo().get(), 1);
  if (mpfr_cmpabs(a.lo().get(), a.hi().get()) > 0)
    mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  else
    mpfr_set(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& a) {
  const Interval m = abs(a);
  Interval r(a.prec());
  mpfr_sqr(r.lo().get(), m.lo().get(), MPFR_RNDD);
  mpfr_sqr(r.hi().get(), m.hi().get(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.hi().get()) < 0) throw Error(ErrorCode::BadParameter, "sqrt of a negative interval");
  Interval r(a.prec());
  if (mpfr_sgn(a.lo().get()) <= 0)
    mpfr_set_zero(r.lo().get(), 1);
  else
    mpfr_sqrt(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) <= 0) throw Error(ErrorCode::PrecisionExhausted, "log of an interval reaching zero");
  Interval r(a.prec());
  mpfr_log(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& a, unsigned k) {
  Interval r = Interval::point(1L, a.prec());
  for (unsigned i = 0; i < k / 2; ++i) r = r * sqr(a);
  if (k % 2 == 1) r = r * a;
  return r;
}

Interval root(const Interval& a, unsigned k) {
  if (k == 0) throw Error(ErrorCode::BadParameter, "zeroth root");
  if (mpfr_sgn(a.lo().get()) < 0) throw Error(ErrorCode::BadParameter, "root of a negative interval");
  Interval r(a.prec());
  mpfr_rootn_ui(r.lo().get(), a.lo().get(), k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi().get(), a.hi().get(), k, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_max(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, long b) { return max(a, Interval::point(b, a.prec())); }

Interval hull(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_min(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) throw Error(ErrorCode::PrecisionExhausted, "disjoint enclosures of the same quantity");
  Interval r(prec_of(a, b));
  mpfr_max(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval with_precision(const Interval& a, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_set(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
  const Interval den = norm2(b);
  const ComplexBox num = a * conj(b);
  return {num.re / den, num.im / den};
}

ComplexBox conj(const ComplexBox& a) { return {a.re, -a.im}; }
ComplexBox mul_si(const ComplexBox& a, long k) { return {mul_si(a.re, k), mul_si(a.im, k)}; }

Interval norm2(const ComplexBox& a) { return sqr(a.re) + sqr(a.im); }
Interval abs(const ComplexBox& a) { return sqrt(norm2(a)); }

ComplexBox intersect(const ComplexBox& a, const ComplexBox& b) {
  return {intersect(a.re, b.re), intersect(a.im, b.im)};
}

}  // namespace normbasis
