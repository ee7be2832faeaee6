#pragma once

#include <vector>

#include "normbasis/number_field.hpp"

namespace normbasis {

/// Fractional ideal of the field's order: the Z-module with basis rows
/// hnf / den, in integral-basis coordinates.
struct FractionalIdeal {
  IntMatrix hnf;
  Integer den = 1;

  friend bool operator==(const FractionalIdeal&, const FractionalIdeal&) = default;
};

FractionalIdeal unit_ideal(const NumberField& field);
/// The order-module generated by gens. Throws ZeroIdeal.
FractionalIdeal ideal_from_generators(const NumberField& field, const std::vector<FieldElement>& gens);
/// Canonical ideal spanned (as a Z-module) by the given elements; checks that
/// the span is closed under the order. Throws ZeroIdeal, NotClosed.
FractionalIdeal ideal_from_module(const NumberField& field, const std::vector<FieldElement>& elems);
FractionalIdeal ideal_mul(const NumberField& field, const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal ideal_scale(const NumberField& field, const FractionalIdeal& a, const Rational& c);
Rational ideal_norm(const NumberField& field, const FractionalIdeal& a);

/// Z-basis of the ideal as field elements.
std::vector<FieldElement> ideal_basis(const NumberField& field, const FractionalIdeal& a);
bool ideal_contains(const NumberField& field, const FractionalIdeal& a, const FieldElement& x);
/// Coordinates of x in the ideal's Z-basis (integers iff x lies in the ideal).
RatVector ideal_coords(const NumberField& field, const FractionalIdeal& a, const FieldElement& x);

}  // namespace normbasis
