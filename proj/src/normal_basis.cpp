#include "normbasis/normal_basis.hpp"

#include <algorithm>

namespace normbasis {

namespace {

// M[i][j] = Tr(e_i sigma_j(x)); linear in x.
RatMatrix trace_matrix(const NumberField& field, const GaloisAction& action, const FieldElement& x) {
  const std::size_t n = field.degree();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const FieldElement s = apply_automorphism(field, action, j, x);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = field.trace(field.mul(field.basis_element(i), s));
  }
  return m;
}

bool central_conjugation(const GaloisAction& action) {
  const std::size_t c = action.conj_index;
  for (std::size_t j = 0; j < action.order(); ++j)
    if (action.table[c][j] != action.table[j][c]) return false;
  return true;
}

Interval log_disc(const NumberField& field, mpfr_prec_t p) {
  return log(Interval::point(Rational(field.abs_disc()), p));
}

struct Bounds {
  Interval bound, height_bound, reference;
};

Bounds bounds_at(const NumberField& field, mpfr_prec_t p) {
  const long n = static_cast<long>(field.degree());
  const Interval ld = log_disc(field, p);
  return {discriminant_root_bound(field, n, p),
          ld / Interval::point(n, p) + log(Interval::point(n, p)),
          mul_si(ld, (n - 1) * (4 * n - 3))};
}

}  // namespace

Interval discriminant_root_bound(const NumberField& field, long factor, mpfr_prec_t prec) {
  const Interval r = root(Interval::point(Rational(field.abs_disc()), prec), static_cast<unsigned>(field.degree()));
  return mul_si(r, factor);
}

Rational delta(const NumberField& field, const GaloisAction& action, const FieldElement& x) {
  return det_exact(trace_matrix(field, action, x));
}

bool is_normal_basis(const NumberField& field, const GaloisAction& action, const FieldElement& x) {
  return delta(field, action, x) != 0;
}

bool conjugates_independent(const NumberField& field, const GaloisAction& action, const FieldElement& x) {
  RationalEchelon e(field.degree());
  for (std::size_t j = 0; j < action.order(); ++j)
    if (!e.insert(apply_automorphism(field, action, j, x).coords())) return false;
  return true;
}

LowerBoundReport check_lower_bound(const NumberField& field, const EmbeddingSet& es, const GaloisAction& action,
                                   const FieldElement& beta) {
  if (!field.in_order(beta)) throw Error(ErrorCode::NotIntegral, "beta is not in the order");
  if (!is_normal_basis(field, action, beta)) throw Error(ErrorCode::NotNormalBasis, "conjugates of beta are dependent");
  const std::size_t n = field.degree();
  LowerBoundReport rep;
  rep.abs_disc = field.abs_disc();
  if (central_conjugation(action)) {
    const Rational q = field.trace(field.mul(beta, apply_automorphism(field, action, action.conj_index, beta)));
    rep.exact_sum = q;
    rep.sum = Interval::point(q, es.root(0).prec());
    Rational qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;
    rep.pass = qn >= Rational(rep.abs_disc);
    return rep;
  }
  // non-central conjugation: the sum need not be rational; compare enclosures
  EmbeddingSet cur = es;
  for (;;) {
    Interval s = Interval::point(0L, cur.root(0).prec());
    for (const auto& a : embedding_abs(cur, beta)) s = s + sqr(a);
    rep.sum = s;
    const Interval lhs = pow(s, static_cast<unsigned>(n));
    const Interval rhs = Interval::point(Rational(rep.abs_disc), cur.root(0).prec());
    if (rhs.certainly_le(lhs)) {
      rep.pass = true;
      return rep;
    }
    if (lhs.certainly_lt(rhs) || cur.precision() * 2 > max_precision_bits()) {
      rep.pass = false;
      return rep;
    }
    cur = refine(field, cur, cur.precision() * 2);
  }
}

NormalBasisCertificate find_normal_basis(const NumberField& field, const EmbeddingSet& es_in, const GaloisAction& action,
                                         SearchMode mode) {
  const std::size_t n = field.degree();
  if (action.order() != n) throw Error(ErrorCode::NotGalois, "action does not have n automorphisms");
  const MinimaResult minima = successive_minima(field, es_in, unit_ideal(field));

  std::vector<RatMatrix> parts;
  for (const auto& w : minima.witnesses) parts.push_back(trace_matrix(field, action, w));
  PolynomialMap map{static_cast<unsigned>(n), [&](std::span<const long> a) {
                      RatMatrix m(n, n);
                      for (std::size_t k = 0; k < a.size(); ++k)
                        if (a[k] != 0)
                          for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t j = 0; j < n; ++j) m(i, j) += a[k] * parts[k](i, j);
                      return det_exact(m);
                    }};
  const SearchResult hit = simplex_search(minima.witnesses, map, mode, &es_in);

  NormalBasisCertificate cert;
  cert.alpha = hit.element;
  cert.coords = hit.coords;
  cert.family = minima.witnesses;
  cert.family_norms = minima.witness_norms;
  cert.delta_value = delta(field, action, cert.alpha);
  cert.order_relative = !field.maximal();
  cert.exhaustive = mode == SearchMode::Exhaustive;
  cert.conjugate_sum = check_lower_bound(field, es_in, action, cert.alpha);

  EmbeddingSet es = es_in;
  for (;;) {
    const mpfr_prec_t p = es.root(0).prec();
    const Bounds b = bounds_at(field, p);
    cert.bound = b.bound;
    cert.height_bound = b.height_bound;
    cert.height_reference = b.reference;
    cert.sup_norms = embedding_abs(es, cert.alpha);
    cert.height = height(es, cert.alpha);
    cert.precision = es.precision();
    const bool sup_ok = std::all_of(cert.sup_norms.begin(), cert.sup_norms.end(),
                                    [&](const Interval& s) { return s.certainly_le(cert.bound); });
    const bool height_ok = cert.height.certainly_le(cert.height_bound);
    cert.height_below_reference = field.abs_disc() > 1 && cert.height.certainly_lt(cert.height_reference);
    const bool reference_ok = field.abs_disc() <= 1 || cert.height_below_reference;
    if (sup_ok && height_ok && reference_ok) {
      cert.status = kStatusCertified;
      return cert;
    }
    if (es.precision() * 2 > max_precision_bits()) {
      cert.status = kStatusUncertified;
      return cert;
    }
    es = refine(field, es, es.precision() * 2);
  }
}

std::vector<std::string> validate(const NumberField& field, const EmbeddingSet& es, const GaloisAction& action,
                                  const NormalBasisCertificate& cert) {
  std::vector<std::string> bad;
  const std::size_t n = field.degree();
  if (cert.delta_value == 0) bad.emplace_back("delta is zero");
  if (delta(field, action, cert.alpha) != cert.delta_value) bad.emplace_back("delta does not match alpha");
  if (!conjugates_independent(field, action, cert.alpha)) bad.emplace_back("conjugates of alpha are dependent");
  if (cert.coords.size() != cert.family.size()) bad.emplace_back("coordinate count differs from family size");
  long total = 0;
  FieldElement rebuilt = field.zero();
  for (std::size_t i = 0; i < cert.coords.size() && i < cert.family.size(); ++i) {
    if (cert.coords[i] < 0) bad.emplace_back("negative simplex coordinate");
    total += cert.coords[i];
    rebuilt += Rational(cert.coords[i]) * cert.family[i];
  }
  if (total > static_cast<long>(n)) bad.emplace_back("simplex coordinates exceed degree n");
  if (rebuilt != cert.alpha) bad.emplace_back("alpha is not the stated combination of the family");
  if (!field.in_order(cert.alpha)) bad.emplace_back("alpha is not integral");
  if (cert.status == kStatusCertified) {
    if (cert.sup_norms.size() != n) bad.emplace_back("wrong number of sup-norm enclosures");
    for (std::size_t i = 0; i < cert.sup_norms.size(); ++i)
      if (!cert.sup_norms[i].certainly_le(cert.bound)) bad.emplace_back("sup-norm " + std::to_string(i) + " exceeds bound");
    if (!cert.height.certainly_le(cert.height_bound)) bad.emplace_back("height exceeds ln|D|/n + ln n");
    if (field.abs_disc() > 1 && !cert.height_below_reference) bad.emplace_back("height not below the reference term");
  }
  const auto b = bounds_at(field, cert.bound.prec());
  if (!b.bound.overlaps(cert.bound)) bad.emplace_back("bound enclosure is wrong");
  if (!b.height_bound.overlaps(cert.height_bound)) bad.emplace_back("height bound enclosure is wrong");
  const auto fresh = embedding_abs(es, cert.alpha);
  for (std::size_t i = 0; i < fresh.size() && i < cert.sup_norms.size(); ++i)
    if (!fresh[i].overlaps(cert.sup_norms[i])) bad.emplace_back("sup-norm " + std::to_string(i) + " does not match alpha");
  if (!height(es, cert.alpha).overlaps(cert.height)) bad.emplace_back("height does not match alpha");
  const auto p2 = check_lower_bound(field, es, action, cert.alpha);
  if (!p2.pass || !cert.conjugate_sum.pass) bad.emplace_back("lower bound check failed");
  if (p2.exact_sum != cert.conjugate_sum.exact_sum) bad.emplace_back("lower bound sum does not match");
  return bad;
}

}  // namespace normbasis
