#pragma once

#include <string>
#include <vector>

#include "normbasis/embeddings.hpp"
#include "normbasis/galois.hpp"
#include "normbasis/ideals.hpp"

namespace normbasis {

/// Successive minima of an ideal lattice for the sup-norm max_i |sigma_i(x)|.
struct MinimaResult {
  std::vector<Interval> lambdas;
  std::vector<FieldElement> witnesses;
  std::vector<Interval> witness_norms;
  /// Every lattice point of norm <= the final search radius was enumerated.
  bool exhaustive = false;
  unsigned precision = 0;
};

/// LLL-reduced Z-basis of I (delta = 99/100) for the quadratic form sum_i |sigma_i(x)|^2.
std::vector<FieldElement> lll_reduce(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal);

MinimaResult successive_minima(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal);

/// First k minima witnesses; each has certified norm <= upper(lambda_k).
std::vector<FieldElement> minima_family(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal,
                                        std::size_t k);

enum class CheckStatus {
  Certified,            // the enclosures (or an exact comparison) prove the inequality
  PassWithinEnclosure,  // upper(lhs) <= upper(rhs) but the enclosures overlap
  Fail,                 // lower(lhs) > upper(rhs)
  Inconclusive,
};

std::string to_string(CheckStatus s);
inline bool passed(CheckStatus s) { return s == CheckStatus::Certified || s == CheckStatus::PassWithinEnclosure; }

struct ProductReport {
  std::size_t k = 0, l = 0;
  MinimaResult minima_ij, minima_i, minima_j;
  Interval lhs;  // lambda_n(IJ)
  Interval rhs;  // lambda_k(I) lambda_l(J)
  CheckStatus status = CheckStatus::Inconclusive;
  /// Decided by exact comparison in K (Galois fields with central conjugation).
  bool exact = false;
  bool equality = false;
};

/// lambda_n(IJ) <= lambda_k(I) lambda_l(J) for k + l >= n + 1. With a Galois
/// action whose conjugation is central, overlapping enclosures are settled by
/// exact comparison. Throws PreconditionViolated for bad (k, l).
ProductReport check_product_inequality(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& i,
                                       const FractionalIdeal& j, std::size_t k, std::size_t l,
                                       const GaloisAction* action = nullptr);

struct BoundsReport {
  MinimaResult minima;
  Rational ideal_norm;
  Interval lambda_n_pow;       // lambda_n^n
  Interval unit_ball_volume;   // 2^r1 pi^r2
  Interval general_rhs;        // 4^(r1+r2) / vol(B)^2 |D| N(I)
  Interval sup_norm_rhs;       // (2/pi)^(2 r2) |D| N(I)
  Interval minima_product;     // prod lambda_i
  Interval minkowski_rhs;      // 2^(r1+r2) sqrt|D| N(I) / vol(B)
  CheckStatus general = CheckStatus::Inconclusive;
  CheckStatus sup_norm = CheckStatus::Inconclusive;
  CheckStatus minkowski = CheckStatus::Inconclusive;
};

BoundsReport check_corollary_bounds(const NumberField& field, const EmbeddingSet& es, const FractionalIdeal& ideal);

/// True iff the products x_i y_j span K. Throws PreconditionViolated when a
/// family is dependent or |xs| + |ys| < n + 1.
bool products_span_check(const NumberField& field, const std::vector<FieldElement>& xs,
                         const std::vector<FieldElement>& ys);

/// Sign of the real number embedding-0(y), refining until decided. Throws
/// PrecisionExhausted if y != 0 cannot be separated from 0.
int real_sign(const NumberField& field, const EmbeddingSet& es, const FieldElement& y);

}  // namespace normbasis
