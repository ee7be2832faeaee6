#include "normbasis/primitive_element.hpp"

#include <algorithm>

#include "normbasis/normal_basis.hpp"

namespace normbasis {

bool is_primitive(const NumberField& field, const FieldElement& x) {
  return static_cast<std::size_t>(field.minimal_polynomial(x).degree()) == field.degree();
}

PrimitiveElementCertificate find_primitive_element(const NumberField& field, const EmbeddingSet& es_in,
                                                   SearchMode mode) {
  const std::size_t n = field.degree();
  if (n < 2) throw Error(ErrorCode::BadParameter, "primitive element search needs degree >= 2");
  const MinimaResult minima = successive_minima(field, es_in, unit_ideal(field));
  const auto& family = minima.witnesses;
  PolynomialMap map{static_cast<unsigned>(n - 1), [&](std::span<const long> a) {
                      FieldElement x = field.zero();
                      for (std::size_t k = 0; k < a.size(); ++k)
                        if (a[k] != 0) x += Rational(a[k]) * family[k];
                      return Rational(is_primitive(field, x) ? 1 : 0);
                    }};
  const SearchResult hit = simplex_search(family, map, mode, &es_in);

  PrimitiveElementCertificate cert;
  cert.alpha = hit.element;
  cert.coords = hit.coords;
  cert.family = family;
  cert.family_norms = minima.witness_norms;
  cert.minpoly = field.minimal_polynomial(cert.alpha);
  cert.order_relative = !field.maximal();
  cert.exhaustive = mode == SearchMode::Exhaustive;
  EmbeddingSet es = es_in;
  for (;;) {
    cert.bound = discriminant_root_bound(field, static_cast<long>(n - 1), es.root(0).prec());
    cert.sup_norms = embedding_abs(es, cert.alpha);
    cert.precision = es.precision();
    if (std::all_of(cert.sup_norms.begin(), cert.sup_norms.end(),
                    [&](const Interval& s) { return s.certainly_le(cert.bound); })) {
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

std::vector<std::string> validate(const NumberField& field, const EmbeddingSet& es,
                                  const PrimitiveElementCertificate& cert) {
  std::vector<std::string> bad;
  const std::size_t n = field.degree();
  const UniPoly m = field.minimal_polynomial(cert.alpha);
  if (m != cert.minpoly) bad.emplace_back("minimal polynomial does not match alpha");
  if (static_cast<std::size_t>(cert.minpoly.degree()) != n) bad.emplace_back("alpha is not primitive");
  if (!cert.minpoly.is_monic()) bad.emplace_back("minimal polynomial is not monic");
  if (!field.from_poly(compose_mod(cert.minpoly, cert.alpha.to_poly(), field.poly())).is_zero())
    bad.emplace_back("minimal polynomial does not annihilate alpha");
  long total = 0;
  FieldElement rebuilt = field.zero();
  for (std::size_t i = 0; i < cert.coords.size() && i < cert.family.size(); ++i) {
    if (cert.coords[i] < 0) bad.emplace_back("negative simplex coordinate");
    total += cert.coords[i];
    rebuilt += Rational(cert.coords[i]) * cert.family[i];
  }
  if (cert.coords.size() != cert.family.size()) bad.emplace_back("coordinate count differs from family size");
  if (total > static_cast<long>(n) - 1) bad.emplace_back("simplex coordinates exceed n - 1");
  if (rebuilt != cert.alpha) bad.emplace_back("alpha is not the stated combination of the family");
  if (cert.status == kStatusCertified)
    for (std::size_t i = 0; i < cert.sup_norms.size(); ++i)
      if (!cert.sup_norms[i].certainly_le(cert.bound)) bad.emplace_back("sup-norm " + std::to_string(i) + " exceeds bound");
  if (!discriminant_root_bound(field, static_cast<long>(n - 1), cert.bound.prec()).overlaps(cert.bound))
    bad.emplace_back("bound enclosure is wrong");
  const auto fresh = embedding_abs(es, cert.alpha);
  for (std::size_t i = 0; i < fresh.size() && i < cert.sup_norms.size(); ++i)
    if (!fresh[i].overlaps(cert.sup_norms[i])) bad.emplace_back("sup-norm " + std::to_string(i) + " does not match alpha");
  return bad;
}

}  // namespace normbasis
