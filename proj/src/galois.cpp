#include "normbasis/galois.hpp"

#include <algorithm>

namespace normbasis {

namespace {

Integer scaled_round(const Interval& v, long shift) {
  Real m = v.mid();
  mpfr_mul_2si(m.get(), m.get(), shift, MPFR_RNDN);
  Integer out;
  mpfr_get_z(out.get_mpz_t(), m.get(), MPFR_RNDN);
  return out;
}

// Indices of the root boxes overlapped by b.
std::vector<std::size_t> overlapping(const EmbeddingSet& es, const ComplexBox& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < es.degree(); ++i)
    if (es.root(i).overlaps(b)) out.push_back(i);
  return out;
}

bool is_root(const NumberField& field, const FieldElement& g) {
  return compose_mod(field.poly(), g.to_poly(), field.poly()).is_zero();
}

// Small relations sum c_k b_k(root_0) ~ s root_j read off an LLL-reduced
// lattice; s is 1 for the maximal order and divides its index otherwise.
std::vector<FieldElement> candidates(const NumberField& field, const EmbeddingSet& es, std::size_t j,
                                     const std::vector<ComplexBox>& basis_values) {
  const std::size_t n = field.degree();
  const long shift = static_cast<long>(es.precision()) - 24;
  const ComplexBox target = es.root(j);
  const bool use_im = es.r1() == 0;
  const std::size_t cols = n + 1 + (use_im ? 2 : 1);
  IntMatrix m(n + 1, cols);
  for (std::size_t k = 0; k <= n; ++k) {
    m(k, k) = 1;
    const ComplexBox v = k < n ? basis_values[k] : ComplexBox(-target.re, -target.im);
    m(k, n + 1) = scaled_round(v.re, shift);
    if (use_im) m(k, n + 2) = scaled_round(v.im, shift);
  }
  const LllResult red = lll_reduce_integer(m);
  std::vector<FieldElement> out;
  for (std::size_t r = 0; r <= n; ++r) {
    const Integer s = red.basis(r, n);
    if (s == 0) continue;
    RatVector c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = make_rational(red.basis(r, k), s);
    out.push_back(field.from_integral(std::span<const Rational>(c)));
  }
  return out;
}

}  // namespace

GaloisAction compute_galois_action(const NumberField& field, const EmbeddingSet& es_in) {
  const std::size_t n = field.degree();
  GaloisAction action;
  action.images.assign(n, FieldElement());
  action.images[0] = field.theta();
  std::size_t found = 1;
  std::vector<bool> done(n, false);
  done[0] = true;
  // a real root cannot be sent to a non-real one inside K
  std::size_t possible = n;
  if (es_in.r1() > 0)
    for (std::size_t j = es_in.r1(); j < n; ++j) {
      done[j] = true;
      --possible;
    }

  EmbeddingSet es = es_in;
  for (unsigned bits = std::max(128U, es_in.precision()); found < possible && bits <= std::max(128U, max_precision_bits());
       bits *= 2) {
    es = refine(field, es, bits);
    std::vector<ComplexBox> basis_values;
    for (std::size_t k = 0; k < n; ++k) basis_values.push_back(eval_embedding(es, 0, field.basis_element(k)));
    for (std::size_t j = 1; j < n; ++j) {
      if (done[j]) continue;
      for (const auto& g : candidates(field, es, j, basis_values)) {
        if (!is_root(field, g)) continue;
        const auto hit = overlapping(es, eval_embedding(es, 0, g));
        if (hit.size() == 1 && !done[hit[0]]) {
          action.images[hit[0]] = g;
          done[hit[0]] = true;
          ++found;
        }
      }
    }
  }
  if (found < n)
    throw Error(ErrorCode::NotGalois, "field is not Galois: " + std::to_string(found) + " of " + std::to_string(n) +
                                          " roots of f lie in K");
  verify_group(field, es, action);
  return action;
}

FieldElement apply_automorphism(const NumberField& field, const GaloisAction& action, std::size_t j,
                                const FieldElement& x) {
  if (j >= action.images.size()) throw Error(ErrorCode::BadParameter, "automorphism index out of range");
  return field.from_poly(compose_mod(x.to_poly(), action.images[j].to_poly(), field.poly()));
}

std::vector<std::vector<std::size_t>> verify_group(const NumberField& field, const EmbeddingSet& es,
                                                   GaloisAction& action) {
  const std::size_t n = action.images.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (action.images[a] == action.images[b])
        throw Error(ErrorCode::NotClosed, "images " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // sigma_a(sigma_b(theta)) = g_b(g_a)
      const FieldElement c = apply_automorphism(field, action, a, action.images[b]);
      const auto it = std::find(action.images.begin(), action.images.end(), c);
      if (it == action.images.end())
        throw Error(ErrorCode::NotClosed,
                    "composition of " + std::to_string(a) + " and " + std::to_string(b) + " is not an image");
      table[a][b] = static_cast<std::size_t>(it - action.images.begin());
    }
  if (action.images[0] != field.theta()) throw Error(ErrorCode::NotClosed, "image 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      row[table[a][b]] = true;
      col[table[b][a]] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(n) ||
        std::count(col.begin(), col.end(), true) != static_cast<long>(n))
      throw Error(ErrorCode::NotClosed, "composition table is not a group table at " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::NotClosed, "composition is not associative");

  // conjugation: embedding 0 o sigma_c = conj o embedding 0
  std::size_t conj_idx = 0;
  if (es.r1() == 0) {
    const ComplexBox want = conj(es.root(0));
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < n; ++j)
      if (eval_embedding(es, 0, action.images[j]).overlaps(want)) hits.push_back(j);
    if (hits.size() != 1 || hits[0] != es.conjugate_index(0))
      throw Error(ErrorCode::NotClosed, "complex conjugation does not match a unique automorphism");
    conj_idx = hits[0];
  }
  if (table[conj_idx][conj_idx] != 0) throw Error(ErrorCode::NotClosed, "conjugation does not have order 2");
  action.conj_index = conj_idx;
  action.table = table;
  return table;
}

}  // namespace normbasis
