#pragma once

// Outward-rounded real intervals and complex boxes with MPFR endpoints.
// Every endpoint is a dyadic rational; every operation encloses the exact
// result of the same operation on all points of its operands.

#include <mpfr.h>

#include <string>

#include "normbasis/exact.hpp"

namespace normbasis {

/// Upper cap on working precision, read once from NORMBASIS_MAX_BITS (default 4096).
unsigned max_precision_bits();

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}

  static Interval point(const Rational& q, mpfr_prec_t prec);
  static Interval point(long v, mpfr_prec_t prec);
  static Interval hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  /// Decimal strings, rounded outward on parse.
  static Interval parse(const std::string& lo, const std::string& hi, mpfr_prec_t prec);

  const Real& lo() const noexcept { return lo_; }
  const Real& hi() const noexcept { return hi_; }
  Real& lo() noexcept { return lo_; }
  Real& hi() noexcept { return hi_; }
  mpfr_prec_t prec() const noexcept { return lo_.prec(); }

  double lo_d() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double mid_d() const;
  Real mid() const;
  Interval width() const;

  bool contains(const Rational& q) const;
  bool contains_zero() const;
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }
  /// Every point of this is <= every point of o.
  bool certainly_le(const Interval& o) const { return mpfr_lessequal_p(hi_.get(), o.lo_.get()) != 0; }
  bool certainly_lt(const Interval& o) const { return mpfr_less_p(hi_.get(), o.lo_.get()) != 0; }
  bool overlaps(const Interval& o) const;
  bool subset_of(const Interval& o) const;

  /// Outward decimal rendering with enough digits for the precision.
  std::string lo_str() const;
  std::string hi_str() const;
  std::string to_string() const;

 private:
  Real lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval mul_si(const Interval& a, long k);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);
Interval abs(const Interval& a);
Interval pow(const Interval& a, unsigned k);
/// Real k-th root of a nonnegative interval.
Interval root(const Interval& a, unsigned k);
Interval max(const Interval& a, const Interval& b);
Interval max(const Interval& a, long b);
Interval hull(const Interval& a, const Interval& b);
/// Throws PrecisionExhausted when a and b are disjoint.
Interval intersect(const Interval& a, const Interval& b);
Interval with_precision(const Interval& a, mpfr_prec_t prec);

struct ComplexBox {
  Interval re;
  Interval im;

  explicit ComplexBox(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexBox point(const Rational& q, mpfr_prec_t prec) {
    return {Interval::point(q, prec), Interval::point(0L, prec)};
  }
  mpfr_prec_t prec() const { return re.prec(); }
  bool overlaps(const ComplexBox& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);
ComplexBox conj(const ComplexBox& a);
ComplexBox mul_si(const ComplexBox& a, long k);
/// |z|^2 and |z|.
Interval norm2(const ComplexBox& a);
Interval abs(const ComplexBox& a);
ComplexBox intersect(const ComplexBox& a, const ComplexBox& b);

}  // namespace normbasis
