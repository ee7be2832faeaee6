#include "normbasis/lattice_minima.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

namespace normbasis {

namespace {

constexpr double kPrefilterSlack = 1e-9;
constexpr double kPruneSlack = 1e-6;
constexpr std::uint64_t kMaxNodes = 200'000'000;

Interval abs_at(const EmbeddingSet& es, std::size_t i, const ComplexBox& b) { return i < es.r1() ? abs(b.re) : abs(b); }

// Real coordinates of the quadratic form sum_i |sigma_i(x)|^2.
std::vector<Interval> embedding_vector(const EmbeddingSet& es, const FieldElement& x) {
  std::vector<Interval> v;
  const Interval root2 = sqrt(Interval::point(2L, es.root(0).prec()));
  for (std::size_t i = 0; i < es.distinct(); ++i) {
    const ComplexBox b = eval_embedding(es, i, x);
    if (i < es.r1()) {
      v.push_back(b.re);
    } else {
      v.push_back(root2 * b.re);
      v.push_back(root2 * b.im);
    }
  }
  return v;
}

std::vector<FieldElement> reduce_basis(const NumberField& field, const EmbeddingSet& es,
                                       const std::vector<FieldElement>& basis) {
  const std::size_t n = field.degree();
  std::vector<std::vector<Interval>> vecs;
  long top = -100000;
  for (const auto& b : basis) {
    vecs.push_back(embedding_vector(es, b));
    for (const auto& c : vecs.back()) {
      const Real m = c.mid();
      if (!mpfr_zero_p(m.get())) top = std::max(top, static_cast<long>(mpfr_get_exp(m.get())));
    }
  }
  const long shift = 100 - top;
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Real v = vecs[k][j].mid();
      mpfr_mul_2si(v.get(), v.get(), shift, MPFR_RNDN);
      mpfr_get_z(m(k, j).get_mpz_t(), v.get(), MPFR_RNDN);
    }
  if (det_integer(m) == 0) return basis;  // rounding collapsed the lattice; keep the input
  const LllResult red = lll_reduce_integer(m);
  std::vector<FieldElement> out;
  for (std::size_t k = 0; k < n; ++k) {
    FieldElement x = field.zero();
    for (std::size_t j = 0; j < n; ++j)
      if (red.transform(k, j) != 0) x += Rational(red.transform(k, j)) * basis[j];
    out.push_back(std::move(x));
  }
  return out;
}

struct Candidate {
  std::vector<long> coeffs;
  Interval norm;
  RatVector int_coords;  // canonical sign: first nonzero entry positive
};

struct Lattice {
  std::vector<FieldElement> basis;
  std::vector<RatVector> int_coords;
  std::vector<std::vector<ComplexBox>> values;                 // values[k][i], i < r1 + r2
  std::vector<std::vector<std::complex<double>>> approx;       // same, in doubles
  std::vector<double> magnitude;                               // max_i |sigma_i(b_k)|
  std::vector<Interval> dual_sum;                              // sum over all i of |sigma_i(b*_k)|
  std::vector<Interval> basis_norm;
};

Lattice prepare(const NumberField& field, const EmbeddingSet& es, const std::vector<FieldElement>& basis) {
  const std::size_t n = field.degree();
  Lattice lat;
  lat.basis = basis;
  RatMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) gram(a, b) = gram(b, a) = field.trace(field.mul(basis[a], basis[b]));
  const RatMatrix ginv = inverse(gram);
  for (std::size_t k = 0; k < n; ++k) {
    lat.int_coords.push_back(field.integral_coords(basis[k]));
    std::vector<ComplexBox> vals;
    std::vector<std::complex<double>> ap;
    double mag = 0;
    for (std::size_t i = 0; i < es.distinct(); ++i) {
      vals.push_back(eval_embedding(es, i, basis[k]));
      ap.emplace_back(vals.back().re.mid_d(), vals.back().im.mid_d());
      mag = std::max(mag, std::abs(ap.back()));
    }
    lat.values.push_back(std::move(vals));
    lat.approx.push_back(std::move(ap));
    lat.magnitude.push_back(mag);
    lat.basis_norm.push_back(sup_norm(es, basis[k]));

    FieldElement dual = field.zero();
    for (std::size_t m = 0; m < n; ++m) dual += ginv(k, m) * basis[m];
    const auto a = embedding_abs(es, dual);
    Interval s = Interval::point(0L, es.root(0).prec());
    for (const auto& v : a) s = s + v;
    lat.dual_sum.push_back(s);
  }
  return lat;
}

Interval certified_norm(const EmbeddingSet& es, const Lattice& lat, const std::vector<long>& c) {
  const mpfr_prec_t p = es.root(0).prec();
  Interval best(p);
  for (std::size_t i = 0; i < es.distinct(); ++i) {
    ComplexBox acc = ComplexBox::point(0, p);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) acc = acc + mul_si(lat.values[k][i], c[k]);
    const Interval a = abs_at(es, i, acc);
    best = i == 0 ? a : max(best, a);
  }
  return best;
}

// Gram-Schmidt data, in doubles, of the real vectors whose squared length is
// sum_i |sigma_i(b_k)|^2 over all n embeddings.
struct GramSchmidt {
  std::vector<double> sq;               // |b*_k|^2
  std::vector<std::vector<double>> mu;  // mu[j][k], k < j
};

GramSchmidt gram_schmidt(const EmbeddingSet& es, const Lattice& lat) {
  const std::size_t n = lat.basis.size();
  std::vector<std::vector<double>> v(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < es.distinct(); ++i) {
      const auto z = lat.approx[k][i];
      if (i < es.r1()) {
        v[k].push_back(z.real());
      } else {
        v[k].push_back(std::sqrt(2.0) * z.real());
        v[k].push_back(std::sqrt(2.0) * z.imag());
      }
    }
  GramSchmidt gs{std::vector<double>(n), std::vector<std::vector<double>>(n, std::vector<double>(n))};
  std::vector<std::vector<double>> star = v;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double d = 0;
      for (std::size_t t = 0; t < n; ++t) d += v[j][t] * star[k][t];
      gs.mu[j][k] = d / gs.sq[k];
      for (std::size_t t = 0; t < n; ++t) star[j][t] -= gs.mu[j][k] * star[k][t];
    }
    for (std::size_t t = 0; t < n; ++t) gs.sq[j] += star[j][t] * star[j][t];
  }
  return gs;
}

// All nonzero lattice points (up to sign) whose sup-norm may be <= radius.
// Coordinates are boxed by the trace-dual bounds and pruned by the ellipsoid
// sum_i |sigma_i(x)|^2 <= n radius^2, with a relative slack for rounding.
std::vector<Candidate> enumerate(const NumberField& field, const EmbeddingSet& es, const Lattice& lat,
                                 const Rational& radius) {
  const std::size_t n = field.degree();
  const std::size_t m = es.distinct();
  const mpfr_prec_t p = es.root(0).prec();
  std::vector<long> bound(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Interval b = Interval::point(radius, p) * lat.dual_sum[k];
    Integer z;
    mpfr_get_z(z.get_mpz_t(), b.hi().get(), MPFR_RNDD);
    if (!z.fits_slong_p() || z > 1'000'000) throw Error(ErrorCode::PrecisionExhausted, "enumeration box too large");
    bound[k] = z.get_si();
  }
  const GramSchmidt gs = gram_schmidt(es, lat);
  const double r = radius.get_d();
  const double budget = static_cast<double>(n) * r * r * (1 + kPruneSlack) + kPruneSlack;
  std::vector<Candidate> out;
  std::vector<long> coeffs(n, 0);
  std::vector<std::vector<std::complex<double>>> partial(n + 1, std::vector<std::complex<double>>(m));
  std::uint64_t nodes = 0;

  // levels run from the last coordinate down to the first; the first nonzero
  // coordinate met is positive so that x and -x are visited once
  auto rec = [&](auto&& self, std::size_t level, bool nonzero, double mag_sum, double used) -> void {
    if (++nodes > kMaxNodes) throw Error(ErrorCode::PrecisionExhausted, "enumeration tree too large");
    if (level == 0) {
      if (!nonzero) return;
      double sup = 0;
      for (std::size_t i = 0; i < m; ++i) sup = std::max(sup, std::abs(partial[0][i]));
      if (sup > r + kPrefilterSlack * (r + mag_sum)) return;
      Candidate c;
      c.coeffs = coeffs;
      c.norm = certified_norm(es, lat, coeffs);
      if (mpfr_cmp_q(c.norm.lo().get(), radius.get_mpq_t()) > 0) return;
      RatVector ic(n);
      for (std::size_t k = 0; k < n; ++k)
        if (coeffs[k] != 0)
          for (std::size_t j = 0; j < n; ++j) ic[j] += coeffs[k] * lat.int_coords[k][j];
      const auto first = std::find_if(ic.begin(), ic.end(), [](const Rational& q) { return q != 0; });
      if (first != ic.end() && *first < 0)
        for (auto& q : ic) q = -q;
      c.int_coords = std::move(ic);
      out.push_back(std::move(c));
      return;
    }
    const std::size_t k = level - 1;
    double center = 0;
    for (std::size_t j = k + 1; j < n; ++j) center -= static_cast<double>(coeffs[j]) * gs.mu[j][k];
    const double room = std::max(0.0, budget - used);
    const double half = std::sqrt(room / gs.sq[k]) * (1 + kPruneSlack) + kPruneSlack;
    const long lo = std::max(nonzero ? -bound[k] : 0L, static_cast<long>(std::ceil(center - half)));
    const long hi = std::min(bound[k], static_cast<long>(std::floor(center + half)));
    for (long a = lo; a <= hi; ++a) {
      coeffs[k] = a;
      for (std::size_t i = 0; i < m; ++i) partial[k][i] = partial[level][i] + static_cast<double>(a) * lat.approx[k][i];
      const double t = static_cast<double>(a) - center;
      self(self, k, nonzero || a != 0, mag_sum + static_cast<double>(std::labs(a)) * lat.magnitude[k],
           used + t * t * gs.sq[k]);
    }
    coeffs[k] = 0;
  };
  rec(rec, n, false, 0.0, 0.0);
  return out;
}

Rational l1(const RatVector& v) {
  Rational s = 0;
  for (const auto& q : v) s += abs(q);
  return s;
}

// Tie-break among overlapping norms: smaller coordinate L1, then
// lexicographically larger canonical coordinates first.
bool tie_before(const Candidate& a, const Candidate& b) {
  const Rational la = l1(a.int_coords), lb = l1(b.int_coords);
  if (la != lb) return la < lb;
  return std::lexicographical_compare(b.int_coords.begin(), b.int_coords.end(), a.int_coords.begin(),
                                      a.int_coords.end());
}

void order_candidates(std::vector<Candidate>& cands) {
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return mpfr_less_p(a.norm.hi().get(), b.norm.hi().get()) != 0;
  });
  std::size_t start = 0;
  while (start < cands.size()) {
    std::size_t end = start + 1;
    Real hull_hi = cands[start].norm.hi();
    while (end < cands.size() && mpfr_lessequal_p(cands[end].norm.lo().get(), hull_hi.get())) {
      if (mpfr_greater_p(cands[end].norm.hi().get(), hull_hi.get())) hull_hi = cands[end].norm.hi();
      ++end;
    }
    std::stable_sort(cands.begin() + static_cast<long>(start), cands.begin() + static_cast<long>(end), tie_before);
    start = end;
  }
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Certified: return "PASS";
    case CheckStatus::PassWithinEnclosure: return "PASS_WITHIN_ENCLOSURE";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::vector<FieldElement> lll_reduce(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal) {
  return reduce_basis(field, es, ideal_basis(field, ideal));
}

namespace {

struct MinimaWork {
  MinimaResult result;
  std::vector<Candidate> candidates;
};

MinimaWork compute_minima(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal) {
  const std::size_t n = field.degree();
  const Lattice lat = prepare(field, es, lll_reduce(field, es, ideal));

  // start at the shortest basis vector and grow until the n-th witness is inside the radius
  Interval shortest = lat.basis_norm[0], longest = lat.basis_norm[0];
  for (const auto& b : lat.basis_norm) {
    if (b.certainly_lt(shortest) || mpfr_less_p(b.hi().get(), shortest.hi().get())) shortest = b;
    if (mpfr_greater_p(b.hi().get(), longest.hi().get())) longest = b;
  }
  auto to_rational_up = [](const Real& r) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), r.get());
    return q;
  };
  Rational radius = to_rational_up(shortest.hi());
  const Rational cap = Rational(2 * to_rational_up(longest.hi()));

  for (;;) {
    auto cands = enumerate(field, es, lat, radius);
    order_candidates(cands);
    MinimaResult res;
    res.precision = es.precision();
    RationalEchelon span(n);
    for (const auto& c : cands) {
      if (!span.insert(c.int_coords)) continue;
      res.witnesses.push_back(field.from_integral(std::span<const Rational>(c.int_coords)));
      res.witness_norms.push_back(c.norm);
      if (span.rank() == n) break;
    }
    bool covered = res.witnesses.size() == n &&
                   mpfr_cmp_q(res.witness_norms.back().hi().get(), radius.get_mpq_t()) <= 0;
    for (std::size_t i = 0; covered && i < n; ++i)
      covered = mpfr_cmp_q(res.witness_norms[i].hi().get(), radius.get_mpq_t()) <= 0;
    if (covered) {
      // lambda_i >= min norm over points outside span(w_1..w_{i-1})
      RationalEchelon prev(n);
      Interval running_hi = res.witness_norms[0];
      Real lower = res.witness_norms[0].lo();
      for (std::size_t i = 0; i < n; ++i) {
        Real lo_i = res.witness_norms[i].lo();
        for (const auto& c : cands)
          if (prev.is_independent(c.int_coords) && mpfr_less_p(c.norm.lo().get(), lo_i.get())) lo_i = c.norm.lo();
        if (mpfr_greater_p(lo_i.get(), lower.get())) lower = lo_i;
        running_hi = i == 0 ? res.witness_norms[0] : max(running_hi, res.witness_norms[i]);
        Interval lam(es.root(0).prec());
        mpfr_set(lam.lo().get(), lower.get(), MPFR_RNDD);
        mpfr_set(lam.hi().get(), running_hi.hi().get(), MPFR_RNDU);
        res.lambdas.push_back(lam);
        prev.insert(field.integral_coords(res.witnesses[i]));
      }
      res.exhaustive = true;
      return {std::move(res), std::move(cands)};
    }
    if (radius >= cap) throw Error(ErrorCode::PrecisionExhausted, "successive minima search did not converge");
    radius = std::min(Rational(2 * radius), cap);
  }
}

}  // namespace

MinimaResult successive_minima(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal) {
  return compute_minima(field, es, ideal).result;
}

std::vector<FieldElement> minima_family(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal,
                                        std::size_t k) {
  if (k < 1 || k > field.degree()) throw Error(ErrorCode::BadParameter, "family size out of range");
  const MinimaResult res = successive_minima(field, es, ideal);
  for (std::size_t i = 0; i < k; ++i)
    if (mpfr_greater_p(res.witness_norms[i].hi().get(), res.lambdas[k - 1].hi().get()))
      throw Error(ErrorCode::PrecisionExhausted, "family member exceeds the k-th minimum enclosure");
  return {res.witnesses.begin(), res.witnesses.begin() + static_cast<long>(k)};
}

int real_sign(const NumberField& field, const EmbeddingSet& es_in, const FieldElement& y) {
  if (y.is_zero()) return 0;
  EmbeddingSet es = es_in;
  for (;;) {
    const Interval v = eval_embedding(es, 0, y).re;
    if (mpfr_sgn(v.lo().get()) > 0) return 1;
    if (mpfr_sgn(v.hi().get()) < 0) return -1;
    if (es.precision() * 2 > std::max(es.precision(), max_precision_bits()))
      throw Error(ErrorCode::PrecisionExhausted, "sign of a nonzero element could not be decided");
    es = refine(field, es, es.precision() * 2);
  }
}

namespace {

CheckStatus compare_le(const Interval& lhs, const Interval& rhs) {
  if (lhs.certainly_le(rhs)) return CheckStatus::Certified;
  if (rhs.certainly_lt(lhs)) return CheckStatus::Fail;
  if (mpfr_lessequal_p(lhs.hi().get(), rhs.hi().get())) return CheckStatus::PassWithinEnclosure;
  return CheckStatus::Inconclusive;
}

bool central_conjugation(const GaloisAction& action) {
  const std::size_t c = action.conj_index;
  for (std::size_t j = 0; j < action.order(); ++j)
    if (action.table[c][j] != action.table[j][c]) return false;
  return true;
}

// |sigma_m(x)|^2 = embedding-0 of sigma_m(x sigma_c(x)) when conjugation is central.
FieldElement abs2_at(const NumberField& field, const GaloisAction& action, std::size_t m, const FieldElement& x) {
  const FieldElement q = field.mul(x, apply_automorphism(field, action, action.conj_index, x));
  return apply_automorphism(field, action, m, q);
}

std::size_t argmax_abs(const NumberField& field, const EmbeddingSet& es, const GaloisAction& action,
                       const FieldElement& x) {
  std::size_t best = 0;
  for (std::size_t m = 1; m < field.degree(); ++m)
    if (real_sign(field, es, abs2_at(field, action, m, x) - abs2_at(field, action, best, x)) > 0) best = m;
  return best;
}

}  // namespace

ProductReport check_product_inequality(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& i,
                                       const FractionalIdeal& j, std::size_t k, std::size_t l,
                                       const GaloisAction* action) {
  const std::size_t n = field.degree();
  if (k < 1 || l < 1 || k > n || l > n || k + l < n + 1)
    throw Error(ErrorCode::PreconditionViolated, "need 1 <= k, l <= n and k + l >= n + 1");
  ProductReport rep;
  rep.k = k;
  rep.l = l;
  const MinimaWork wi = compute_minima(field, es, i);
  const MinimaWork wj = i == j ? wi : compute_minima(field, es, j);
  const MinimaWork wij = compute_minima(field, es, ideal_mul(field, i, j));
  rep.minima_i = wi.result;
  rep.minima_j = wj.result;
  rep.minima_ij = wij.result;
  rep.lhs = rep.minima_ij.lambdas[n - 1];
  rep.rhs = rep.minima_i.lambdas[k - 1] * rep.minima_j.lambdas[l - 1];
  rep.status = compare_le(rep.lhs, rep.rhs);
  if (rep.status == CheckStatus::Certified || rep.status == CheckStatus::Fail || action == nullptr ||
      !central_conjugation(*action))
    return rep;

  // Exact route. lambda_n(IJ) <= max_t |w_t| over the IJ witnesses, and
  // lambda_k(I) is the norm of some enumerated point whose enclosure meets
  // the lambda_k enclosure, so the minimum over those points bounds it below.
  auto abs2 = [&](const FieldElement& x) {
    return abs2_at(field, *action, argmax_abs(field, es, *action, x), x);
  };
  auto min_abs2 = [&](const MinimaWork& w, std::size_t idx) {
    const Interval& lam = w.result.lambdas[idx];
    std::optional<FieldElement> best;
    for (const auto& c : w.candidates) {
      if (!c.norm.overlaps(lam)) continue;
      const FieldElement v = abs2(field.from_integral(std::span<const Rational>(c.int_coords)));
      if (!best || real_sign(field, es, v - *best) < 0) best = v;
    }
    return *best;
  };
  const FieldElement rhs = field.mul(min_abs2(wi, k - 1), min_abs2(wj, l - 1));
  bool eq = false;
  for (const auto& w : rep.minima_ij.witnesses)
    for (std::size_t m = 0; m < n; ++m) {
      const int s = real_sign(field, es, abs2_at(field, *action, m, w) - rhs);
      if (s > 0) return rep;
      eq = eq || s == 0;
    }
  rep.exact = true;
  rep.equality = eq;
  rep.status = CheckStatus::Certified;
  return rep;
}

BoundsReport check_corollary_bounds(const NumberField& field, const EmbeddingSet& es_in, const FractionalIdeal& ideal) {
  const std::size_t n = field.degree();
  BoundsReport rep;
  rep.ideal_norm = ideal_norm(field, ideal);
  EmbeddingSet es = es_in;
  for (;;) {
    const mpfr_prec_t p = es.root(0).prec();
    rep.minima = successive_minima(field, es, ideal);
    rep.lambda_n_pow = pow(rep.minima.lambdas[n - 1], static_cast<unsigned>(n));
    const Interval pi = Interval::pi(p);
    const Interval two = Interval::point(2L, p);
    rep.unit_ball_volume = pow(two, static_cast<unsigned>(field.r1())) * pow(pi, static_cast<unsigned>(field.r2()));
    const Interval dn = Interval::point(Rational(field.abs_disc()) * rep.ideal_norm, p);
    rep.general_rhs = pow(Interval::point(4L, p), static_cast<unsigned>(field.r1() + field.r2())) /
                      sqr(rep.unit_ball_volume) * dn;
    rep.sup_norm_rhs = pow(two / pi, static_cast<unsigned>(2 * field.r2())) * dn;
    rep.minima_product = Interval::point(1L, p);
    for (const auto& l : rep.minima.lambdas) rep.minima_product = rep.minima_product * l;
    rep.minkowski_rhs = pow(two, static_cast<unsigned>(field.r1() + field.r2())) * covolume(field, rep.ideal_norm, static_cast<unsigned>(p)) *
                        pow(two, static_cast<unsigned>(field.r2())) / rep.unit_ball_volume;
    rep.general = compare_le(rep.lambda_n_pow, rep.general_rhs);
    rep.sup_norm = compare_le(rep.lambda_n_pow, rep.sup_norm_rhs);
    rep.minkowski = compare_le(rep.minima_product, rep.minkowski_rhs);
    const bool settled = rep.general != CheckStatus::Inconclusive && rep.sup_norm != CheckStatus::Inconclusive &&
                         rep.minkowski != CheckStatus::Inconclusive;
    if (settled || es.precision() * 2 > std::min(1024U, max_precision_bits())) return rep;
    es = refine(field, es, es.precision() * 2);
  }
}

bool products_span_check(const NumberField& field, const std::vector<FieldElement>& xs,
                         const std::vector<FieldElement>& ys) {
  const std::size_t n = field.degree();
  if (xs.size() + ys.size() < n + 1)
    throw Error(ErrorCode::PreconditionViolated, "families too small: need |xs| + |ys| >= n + 1");
  auto independent = [&](const std::vector<FieldElement>& v) {
    RationalEchelon e(n);
    for (const auto& x : v)
      if (!e.insert(x.coords())) return false;
    return true;
  };
  if (!independent(xs) || !independent(ys)) throw Error(ErrorCode::PreconditionViolated, "family is not independent");
  RationalEchelon span(n);
  for (const auto& x : xs)
    for (const auto& y : ys) {
      span.insert(field.mul(x, y).coords());
      if (span.rank() == n) return true;
    }
  return false;
}

}  // namespace normbasis
