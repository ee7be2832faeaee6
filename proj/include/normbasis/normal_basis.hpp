#pragma once

#include <string>
#include <vector>

#include "normbasis/avoidance.hpp"
#include "normbasis/galois.hpp"
#include "normbasis/lattice_minima.hpp"

namespace normbasis {

/// det[Tr(e_i sigma_j(x))] over the field's integral basis.
Rational delta(const NumberField& field, const GaloisAction& action, const FieldElement& x);
/// Delta(x) != 0: the conjugates of x form a Q-basis of K.
bool is_normal_basis(const NumberField& field, const GaloisAction& action, const FieldElement& x);
/// Independent criterion: exact rank of the coordinate matrix of the conjugates.
bool conjugates_independent(const NumberField& field, const GaloisAction& action, const FieldElement& x);

struct LowerBoundReport {
  /// sum_i |sigma_i(beta)|^2, exact when conjugation is central in the group.
  std::optional<Rational> exact_sum;
  Interval sum;
  Integer abs_disc;
  bool pass = false;
};

/// sum_i |sigma_i(beta)|^2 >= |D_K|^(1/n), decided as q^n >= |D_K|.
/// Throws NotIntegral, NotNormalBasis.
LowerBoundReport check_lower_bound(const NumberField& field, const EmbeddingSet& es, const GaloisAction& action,
                                   const FieldElement& beta);

inline constexpr const char* kStatusCertified = "CERTIFIED";
inline constexpr const char* kStatusUncertified = "BOUND_UNCERTIFIED";

struct NormalBasisCertificate {
  FieldElement alpha;
  std::vector<long> coords;
  std::vector<FieldElement> family;
  std::vector<Interval> family_norms;
  Rational delta_value;
  Interval bound;                    // n |D|^(1/n)
  std::vector<Interval> sup_norms;   // |sigma_i(alpha)|, i = 1..n
  Interval height;
  Interval height_bound;             // ln|D|/n + ln n
  Interval height_reference;             // (n-1)(4n-3) ln|D|, constant c(n) omitted
  bool height_below_reference = false;
  LowerBoundReport conjugate_sum;
  std::string status;
  bool order_relative = false;
  bool exhaustive = false;
  unsigned precision = 0;
};

/// Minima family of the order, simplex search with Delta (degree n), then
/// certification of all bounds at increasing precision.
NormalBasisCertificate find_normal_basis(const NumberField& field, const EmbeddingSet& es, const GaloisAction& action,
                                         SearchMode mode = SearchMode::FirstHit);

/// Rechecks every field of a certificate; returns the list of failures.
std::vector<std::string> validate(const NumberField& field, const EmbeddingSet& es, const GaloisAction& action,
                                  const NormalBasisCertificate& cert);

/// n |D|^(1/n) and (n-1) |D|^(1/n) style bounds: factor * |D|^(1/n).
Interval discriminant_root_bound(const NumberField& field, long factor, mpfr_prec_t prec);

}  // namespace normbasis
