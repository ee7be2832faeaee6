// Root isolation: Weierstrass (Durand-Kerner) iterations give approximations
// z_i; with W_i = f(z_i) / prod_{j != i} (z_i - z_j) the disks
// D(z_i, n |W_i|) cover all roots and each connected component holds as many
// roots as disks, so pairwise disjoint disks each isolate exactly one root.
// A disk centred on the real axis that isolates a root isolates a real root.

#include "normbasis/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace normbasis {

namespace {

constexpr unsigned kGuardBits = 32;

struct MpComplex {
  Real re, im;
  explicit MpComplex(mpfr_prec_t p) : re(p), im(p) {}
};

void mc_sub(MpComplex& r, const MpComplex& a, const MpComplex& b) {
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void mc_mul(MpComplex& r, const MpComplex& a, const MpComplex& b, MpComplex& tmp) {
  mpfr_mul(tmp.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(tmp.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  Real t(r.re.prec());
  mpfr_sub(t.get(), tmp.re.get(), tmp.im.get(), MPFR_RNDN);
  mpfr_mul(tmp.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(tmp.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), tmp.re.get(), tmp.im.get(), MPFR_RNDN);
  mpfr_set(r.re.get(), t.get(), MPFR_RNDN);
}

void mc_div(MpComplex& r, const MpComplex& a, const MpComplex& b) {
  const mpfr_prec_t p = r.re.prec();
  Real den(p), t1(p), t2(p), re(p);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t1.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
}

std::vector<std::complex<long double>> initial_roots(const UniPoly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<long double> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = static_cast<long double>(f.coeff(k).get_d());
  long double radius = 0;
  for (std::size_t k = 1; k <= n; ++k)
    radius = std::max(radius, std::pow(std::fabs(c[n - k]), 1.0L / static_cast<long double>(k)));
  radius = 2 * radius + 0.5L;
  std::vector<std::complex<long double>> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double ang = 2.0L * 3.14159265358979323846L * static_cast<long double>(i) / static_cast<long double>(n) + 0.4L;
    z[i] = std::polar(radius, ang);
  }
  auto eval = [&](std::complex<long double> x) {
    std::complex<long double> acc = 0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) == 0) den = 1e-30L;
      const auto w = eval(z[i]) / den;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

void horner(MpComplex& out, const UniPoly& f, const MpComplex& z) {
  const mpfr_prec_t p = out.re.prec();
  MpComplex acc(p), tmp(p);
  for (int k = f.degree(); k >= 0; --k) {
    mc_mul(acc, acc, z, tmp);
    Real c(p);
    const Rational q = f.coeff(static_cast<std::size_t>(k));
    mpfr_set_q(c.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc.re.get(), acc.re.get(), c.get(), MPFR_RNDN);
  }
  mpfr_set(out.re.get(), acc.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), acc.im.get(), MPFR_RNDN);
}

// Weierstrass iterations until corrections fall below 2^-bits relative.
void polish(std::vector<MpComplex>& z, const UniPoly& f, unsigned bits, int max_iter) {
  const std::size_t n = z.size();
  const mpfr_prec_t p = z.front().re.prec();
  MpComplex num(p), den(p), diff(p), w(p), tmp(p);
  Real mag(p), tol(p);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      horner(num, f, z[i]);
      mpfr_set_ui(den.re.get(), 1, MPFR_RNDN);
      mpfr_set_zero(den.im.get(), 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        mc_sub(diff, z[i], z[j]);
        mc_mul(den, den, diff, tmp);
      }
      if (mpfr_zero_p(den.re.get()) && mpfr_zero_p(den.im.get())) {
        // coincident approximations: nudge apart
        mpfr_set_d(den.re.get(), std::ldexp(1.0, -static_cast<int>(bits / 2)), MPFR_RNDN);
        mpfr_add(z[i].im.get(), z[i].im.get(), den.re.get(), MPFR_RNDN);
        done = false;
        continue;
      }
      mc_div(w, num, den);
      mc_sub(z[i], z[i], w);
      mpfr_hypot(mag.get(), w.re.get(), w.im.get(), MPFR_RNDN);
      mpfr_hypot(tol.get(), z[i].re.get(), z[i].im.get(), MPFR_RNDN);
      mpfr_add_ui(tol.get(), tol.get(), 1, MPFR_RNDN);
      mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits), MPFR_RNDN);
      if (mpfr_greater_p(mag.get(), tol.get())) done = false;
    }
    if (done) return;
  }
}

ComplexBox point_box(const MpComplex& z, mpfr_prec_t p) {
  ComplexBox b(p);
  mpfr_set(b.re.lo().get(), z.re.get(), MPFR_RNDD);
  mpfr_set(b.re.hi().get(), z.re.get(), MPFR_RNDU);
  mpfr_set(b.im.lo().get(), z.im.get(), MPFR_RNDD);
  mpfr_set(b.im.hi().get(), z.im.get(), MPFR_RNDU);
  return b;
}

ComplexBox horner_box(const UniPoly& f, const ComplexBox& z) {
  const mpfr_prec_t p = z.prec();
  ComplexBox acc(p);
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * z;
    acc.re = acc.re + Interval::point(f.coeff(static_cast<std::size_t>(k)), p);
  }
  return acc;
}

struct Disk {
  MpComplex center;
  Real radius;  // upper bound
  explicit Disk(mpfr_prec_t p) : center(p), radius(p) {}
};

// Separation of two disks: |c_i - c_j| > r_i + r_j.
bool separated(const Disk& a, const Disk& b, mpfr_prec_t p) {
  ComplexBox d = point_box(a.center, p) - point_box(b.center, p);
  const Interval dist = abs(d);
  Real sum(p);
  mpfr_add(sum.get(), a.radius.get(), b.radius.get(), MPFR_RNDU);
  return mpfr_greater_p(dist.lo().get(), sum.get()) != 0;
}

ComplexBox disk_box(const Disk& d, bool real, mpfr_prec_t p) {
  ComplexBox b(p);
  mpfr_sub(b.re.lo().get(), d.center.re.get(), d.radius.get(), MPFR_RNDD);
  mpfr_add(b.re.hi().get(), d.center.re.get(), d.radius.get(), MPFR_RNDU);
  if (real) {
    mpfr_set_zero(b.im.lo().get(), 1);
    mpfr_set_zero(b.im.hi().get(), 1);
  } else {
    mpfr_sub(b.im.lo().get(), d.center.im.get(), d.radius.get(), MPFR_RNDD);
    mpfr_add(b.im.hi().get(), d.center.im.get(), d.radius.get(), MPFR_RNDU);
  }
  return b;
}

// Certified isolation at precision `bits` from approximations z (all n roots).
// Returns representative boxes (r1 reals, then r2 upper-half roots) in the
// order of `z` after classification, or nothing when certification fails.
std::optional<std::vector<ComplexBox>> isolate(const UniPoly& f, std::size_t r1, std::size_t r2,
                                               std::vector<MpComplex>& z, unsigned bits) {
  const std::size_t n = z.size();
  const mpfr_prec_t p = static_cast<mpfr_prec_t>(bits + kGuardBits);

  // classify: the r1 approximations closest to the axis are the real roots
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return mpfr_cmpabs(z[a].im.get(), z[b].im.get()) < 0;
  });
  std::vector<std::size_t> reals(idx.begin(), idx.begin() + static_cast<long>(r1));
  std::vector<std::size_t> upper, lower;
  for (std::size_t k = r1; k < n; ++k) (mpfr_sgn(z[idx[k]].im.get()) > 0 ? upper : lower).push_back(idx[k]);
  if (upper.size() != r2 || lower.size() != r2) return std::nullopt;
  for (auto i : reals) mpfr_set_zero(z[i].im.get(), 1);
  // pair each upper root with the nearest lower one and make them exact conjugates
  std::vector<bool> used(n, false);
  for (auto u : upper) {
    std::size_t best = n;
    double best_d = 0;
    for (auto l : lower) {
      if (used[l]) continue;
      const double dr = mpfr_get_d(z[u].re.get(), MPFR_RNDN) - mpfr_get_d(z[l].re.get(), MPFR_RNDN);
      const double di = mpfr_get_d(z[u].im.get(), MPFR_RNDN) + mpfr_get_d(z[l].im.get(), MPFR_RNDN);
      const double d = std::hypot(dr, di);
      if (best == n || d < best_d) {
        best = l;
        best_d = d;
      }
    }
    used[best] = true;
    mpfr_set(z[best].re.get(), z[u].re.get(), MPFR_RNDN);
    mpfr_neg(z[best].im.get(), z[u].im.get(), MPFR_RNDN);
  }

  std::vector<Disk> disks;
  disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Disk d(p);
    mpfr_set(d.center.re.get(), z[i].re.get(), MPFR_RNDN);
    mpfr_set(d.center.im.get(), z[i].im.get(), MPFR_RNDN);
    const ComplexBox zi = point_box(z[i], p);
    ComplexBox den = ComplexBox::point(1, p);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den = den * (zi - point_box(z[j], p));
    if (den.contains_zero()) return std::nullopt;
    const ComplexBox w = horner_box(f, zi) / den;
    const Interval r = mul_si(abs(w), static_cast<long>(n));
    mpfr_set(d.radius.get(), r.hi().get(), MPFR_RNDU);
    disks.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!separated(disks[i], disks[j], p)) return std::nullopt;
  for (auto u : upper) {
    Real lo(p);
    mpfr_sub(lo.get(), disks[u].center.im.get(), disks[u].radius.get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) return std::nullopt;
  }

  std::vector<ComplexBox> out;
  for (auto i : reals) out.push_back(disk_box(disks[i], true, p));
  for (auto u : upper) out.push_back(disk_box(disks[u], false, p));
  return out;
}

std::vector<MpComplex> to_mp(const std::vector<std::complex<long double>>& z, mpfr_prec_t p) {
  std::vector<MpComplex> out;
  for (const auto& c : z) {
    MpComplex m(p);
    mpfr_set_ld(m.re.get(), c.real(), MPFR_RNDN);
    mpfr_set_ld(m.im.get(), c.imag(), MPFR_RNDN);
    out.push_back(std::move(m));
  }
  return out;
}

// all n approximations from representative boxes
std::vector<MpComplex> from_boxes(const std::vector<ComplexBox>& boxes, std::size_t r1, mpfr_prec_t p) {
  std::vector<MpComplex> out;
  for (const auto& b : boxes) {
    MpComplex m(p);
    mpfr_set(m.re.get(), b.re.mid().get(), MPFR_RNDN);
    mpfr_set(m.im.get(), b.im.mid().get(), MPFR_RNDN);
    out.push_back(std::move(m));
  }
  for (std::size_t i = r1; i < boxes.size(); ++i) {
    MpComplex m(p);
    mpfr_set(m.re.get(), out[i].re.get(), MPFR_RNDN);
    mpfr_neg(m.im.get(), out[i].im.get(), MPFR_RNDN);
    out.push_back(std::move(m));
  }
  return out;
}

// Compare by real part, then imaginary part; overlapping real parts count as equal.
bool box_before(const ComplexBox& a, const ComplexBox& b) {
  if (a.re.certainly_lt(b.re)) return true;
  if (b.re.certainly_lt(a.re)) return false;
  return mpfr_less_p(a.im.mid().get(), b.im.mid().get()) != 0;
}

std::vector<ComplexBox> canonical_order(std::vector<ComplexBox> boxes, std::size_t r1) {
  auto insertion_sort = [](auto first, auto last) {
    for (auto it = first; it != last; ++it)
      for (auto j = it; j != first && box_before(*j, *(j - 1)); --j) std::iter_swap(j, j - 1);
  };
  insertion_sort(boxes.begin(), boxes.begin() + static_cast<long>(r1));
  insertion_sort(boxes.begin() + static_cast<long>(r1), boxes.end());
  return boxes;
}

std::optional<std::vector<ComplexBox>> isolate_from(const NumberField& field, std::vector<MpComplex> z, unsigned bits) {
  const int iters = 60 + 4 * static_cast<int>(field.degree());
  polish(z, field.poly(), bits + 8, iters);
  return isolate(field.poly(), field.r1(), field.r2(), z, bits);
}

}  // namespace

ComplexBox EmbeddingSet::root(std::size_t i) const {
  if (i < distinct()) return boxes_[i];
  if (i < degree()) return conj(boxes_[i - r2_]);
  throw Error(ErrorCode::BadParameter, "embedding index out of range");
}

std::size_t EmbeddingSet::conjugate_index(std::size_t i) const {
  if (i < r1_) return i;
  if (i < distinct()) return i + r2_;
  if (i < degree()) return i - r2_;
  throw Error(ErrorCode::BadParameter, "embedding index out of range");
}

EmbeddingSet compute_embeddings(const NumberField& field, unsigned precision) {
  if (precision < 32) throw Error(ErrorCode::BadParameter, "precision must be at least 32 bits");
  const std::size_t n = field.degree();
  if (n == 1) {
    const mpfr_prec_t p = static_cast<mpfr_prec_t>(precision + kGuardBits);
    return EmbeddingSet({ComplexBox::point(-field.poly().coeff(0), p)}, 1, 0, precision);
  }
  const auto start = initial_roots(field.poly());
  for (unsigned bits = precision; bits <= std::max(precision, max_precision_bits()); bits *= 2) {
    auto boxes = isolate_from(field, to_mp(start, static_cast<mpfr_prec_t>(bits + kGuardBits)), bits);
    if (!boxes) continue;
    auto ordered = canonical_order(std::move(*boxes), field.r1());
    if (bits == precision) return EmbeddingSet(std::move(ordered), field.r1(), field.r2(), precision);
    // certified at higher precision only: carry the boxes at that precision
    return EmbeddingSet(std::move(ordered), field.r1(), field.r2(), bits);
  }
  throw Error(ErrorCode::PrecisionExhausted, "could not separate the roots of " + field.poly().to_string());
}

EmbeddingSet refine(const NumberField& field, const EmbeddingSet& es, unsigned precision) {
  if (precision <= es.precision()) return es;
  if (field.degree() == 1) return compute_embeddings(field, precision);
  for (unsigned bits = precision; bits <= std::max(precision, max_precision_bits()); bits *= 2) {
    const mpfr_prec_t p = static_cast<mpfr_prec_t>(bits + kGuardBits);
    auto boxes = isolate_from(field, from_boxes(es.boxes(), es.r1(), p), bits);
    if (!boxes) continue;
    // match by containment of the new centre in the old box, then intersect
    std::vector<ComplexBox> out;
    for (const auto& old : es.boxes()) {
      const ComplexBox* hit = nullptr;
      for (const auto& nb : *boxes) {
        const Real cre = nb.re.mid(), cim = nb.im.mid();
        const bool in_re = mpfr_lessequal_p(old.re.lo().get(), cre.get()) && mpfr_lessequal_p(cre.get(), old.re.hi().get());
        const bool in_im = mpfr_lessequal_p(old.im.lo().get(), cim.get()) && mpfr_lessequal_p(cim.get(), old.im.hi().get());
        if (in_re && in_im) {
          if (hit != nullptr) {
            hit = nullptr;
            break;
          }
          hit = &nb;
        }
      }
      if (hit == nullptr) break;
      out.push_back(intersect(ComplexBox(with_precision(old.re, p), with_precision(old.im, p)), *hit));
    }
    if (out.size() == es.boxes().size()) return EmbeddingSet(std::move(out), es.r1(), es.r2(), bits);
  }
  throw Error(ErrorCode::PrecisionExhausted, "refinement of the roots of " + field.poly().to_string() + " failed");
}

ComplexBox eval_embedding(const EmbeddingSet& es, std::size_t i, const FieldElement& x) {
  const ComplexBox z = es.root(i);
  const mpfr_prec_t p = z.prec();
  ComplexBox acc(p);
  for (std::size_t k = x.size(); k-- > 0;) {
    acc = acc * z;
    if (x[k] != 0) acc.re = acc.re + Interval::point(x[k], p);
  }
  return acc;
}

ComplexBox eval_embedding(const NumberField& field, const EmbeddingSet& es, std::size_t i, const FieldElement& x,
                          unsigned precision) {
  EmbeddingSet cur = refine(field, es, precision);
  for (;;) {
    ComplexBox v = eval_embedding(cur, i, x);
    // target: width <= 2^(1-precision) (1 + |v|)
    Interval mag = abs(v);
    Interval target = mag + Interval::point(1L, v.prec());
    Real bound(v.prec());
    mpfr_mul_2si(bound.get(), target.hi().get(), 1 - static_cast<long>(precision), MPFR_RNDD);
    const Interval wr = v.re.width(), wi = v.im.width();
    if (mpfr_lessequal_p(wr.hi().get(), bound.get()) && mpfr_lessequal_p(wi.hi().get(), bound.get())) return v;
    if (cur.precision() * 2 > max_precision_bits())
      throw Error(ErrorCode::PrecisionExhausted, "embedding evaluation did not reach the requested width");
    cur = refine(field, cur, cur.precision() * 2);
  }
}

std::vector<Interval> embedding_abs(const EmbeddingSet& es, const FieldElement& x) {
  std::vector<Interval> out;
  out.reserve(es.degree());
  for (std::size_t i = 0; i < es.distinct(); ++i) {
    ComplexBox v = eval_embedding(es, i, x);
    out.push_back(i < es.r1() ? abs(v.re) : abs(v));
  }
  for (std::size_t t = 0; t < es.r2(); ++t) out.push_back(out[es.r1() + t]);
  return out;
}

Interval sup_norm(const EmbeddingSet& es, const FieldElement& x) {
  const auto a = embedding_abs(es, x);
  Interval m = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) m = max(m, a[i]);
  return m;
}

Interval height(const EmbeddingSet& es, const FieldElement& x) {
  const auto a = embedding_abs(es, x);
  const mpfr_prec_t p = a.front().prec();
  Interval s = Interval::point(0L, p);
  for (const auto& v : a) s = s + log(max(v, 1L));
  return s / Interval::point(static_cast<long>(a.size()), p);
}

Interval covolume(const NumberField& field, const Rational& ideal_norm, unsigned precision) {
  if (ideal_norm <= 0) throw Error(ErrorCode::BadParameter, "ideal norm must be positive");
  const mpfr_prec_t p = static_cast<mpfr_prec_t>(precision);
  Interval v = sqrt(Interval::point(Rational(field.abs_disc()), p)) * Interval::point(ideal_norm, p);
  Interval two_r2 = Interval::point(Rational(Integer(1) << static_cast<mp_bitcnt_t>(field.r2())), p);
  return v / two_r2;
}

}  // namespace normbasis
