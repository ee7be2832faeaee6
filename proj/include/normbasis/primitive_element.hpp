#pragma once

#include <string>
#include <vector>

#include "normbasis/avoidance.hpp"
#include "normbasis/lattice_minima.hpp"

namespace normbasis {

/// K = Q(x), i.e. the minimal polynomial of x has degree n.
bool is_primitive(const NumberField& field, const FieldElement& x);

struct PrimitiveElementCertificate {
  FieldElement alpha;
  std::vector<long> coords;
  std::vector<FieldElement> family;
  std::vector<Interval> family_norms;
  UniPoly minpoly;
  Interval bound;                   // (n-1) |D|^(1/n)
  std::vector<Interval> sup_norms;  // |sigma_i(alpha)|, i = 1..n
  std::string status;
  bool order_relative = false;
  bool exhaustive = false;
  unsigned precision = 0;
};

/// Minima family of the order, simplex search of degree n-1 for a primitive
/// element, then certification of |sigma_i(alpha)| <= (n-1)|D|^(1/n).
PrimitiveElementCertificate find_primitive_element(const NumberField& field, const EmbeddingSet& es,
                                                   SearchMode mode = SearchMode::FirstHit);

std::vector<std::string> validate(const NumberField& field, const EmbeddingSet& es,
                                  const PrimitiveElementCertificate& cert);

}  // namespace normbasis
