#pragma once

#include <vector>

#include "normbasis/interval.hpp"
#include "normbasis/number_field.hpp"

namespace normbasis {

/// Certified complex embeddings of K. Indices (0-based) follow the usual
/// convention: 0..r1-1 real roots in ascending order; r1..r1+r2-1 one root of
/// each conjugate pair (imaginary part > 0), sorted by real then imaginary
/// part; r1+r2+t is the complex conjugate of r1+t.
class EmbeddingSet {
 public:
  EmbeddingSet(std::vector<ComplexBox> boxes, std::size_t r1, std::size_t r2, unsigned precision)
      : boxes_(std::move(boxes)), r1_(r1), r2_(r2), precision_(precision) {}

  const std::vector<ComplexBox>& boxes() const noexcept { return boxes_; }
  std::size_t r1() const noexcept { return r1_; }
  std::size_t r2() const noexcept { return r2_; }
  std::size_t degree() const noexcept { return r1_ + 2 * r2_; }
  /// Number of embeddings up to conjugation.
  std::size_t distinct() const noexcept { return r1_ + r2_; }
  unsigned precision() const noexcept { return precision_; }

  /// Isolating box of the root sigma_i(theta), any 0 <= i < n.
  ComplexBox root(std::size_t i) const;
  /// Index of the conjugate embedding.
  std::size_t conjugate_index(std::size_t i) const;

 private:
  std::vector<ComplexBox> boxes_;
  std::size_t r1_, r2_;
  unsigned precision_;
};

inline constexpr const char* kEmbeddingOrder =
    "real roots ascending; complex representatives (im > 0) by real then imaginary part; "
    "sigma_{j+r2} = conj(sigma_j)";

/// Throws BadParameter for precision < 32 and PrecisionExhausted when the
/// roots cannot be separated within max_precision_bits().
EmbeddingSet compute_embeddings(const NumberField& field, unsigned precision = 128);
/// Same roots at higher precision; every new box is a subset of the old one.
EmbeddingSet refine(const NumberField& field, const EmbeddingSet& es, unsigned precision);

/// Box containing sigma_i(x), evaluated at the precision of `es`.
ComplexBox eval_embedding(const EmbeddingSet& es, std::size_t i, const FieldElement& x);
/// Refines until the box width is <= 2^(1-precision) (1 + |sigma_i(x)|).
ComplexBox eval_embedding(const NumberField& field, const EmbeddingSet& es, std::size_t i, const FieldElement& x,
                          unsigned precision);

/// |sigma_i(x)| for all n embeddings.
std::vector<Interval> embedding_abs(const EmbeddingSet& es, const FieldElement& x);
/// max_i |sigma_i(x)|.
Interval sup_norm(const EmbeddingSet& es, const FieldElement& x);
/// (1/n) sum_i ln max(1, |sigma_i(x)|) over all n embeddings.
Interval height(const EmbeddingSet& es, const FieldElement& x);
/// sqrt|D_K| N(I) / 2^r2.
Interval covolume(const NumberField& field, const Rational& ideal_norm, unsigned precision = 128);

}  // namespace normbasis
