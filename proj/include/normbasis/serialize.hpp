#pragma once

// JSON forms of the exact and certified objects. Rationals and big integers
// are strings ("p/q"); intervals are {"lo", "hi", "bits"} with outward-rounded
// decimal endpoints. Key order is fixed, so equal inputs dump to equal bytes.

#include <json.hpp>

#include "normbasis/galois.hpp"
#include "normbasis/lattice_minima.hpp"
#include "normbasis/normal_basis.hpp"
#include "normbasis/primitive_element.hpp"

namespace normbasis {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "normbasis/1";

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const Interval& iv);
Json to_json(const ComplexBox& b);
Json to_json(const UniPoly& p);

/// Power-basis and integral-basis coordinates plus the polynomial in x.
Json to_json(const NumberField& field, const FieldElement& x);

Json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

Json to_json(const EmbeddingSet& es);
Json to_json(const NumberField& field, const GaloisAction& action);
Json to_json(const FractionalIdeal& ideal);
Json to_json(const NumberField& field, const MinimaResult& m);
Json to_json(const NumberField& field, const ProductReport& r);
Json to_json(const NumberField& field, const BoundsReport& r);
Json to_json(const NumberField& field, const NormalBasisCertificate& c);
Json to_json(const NumberField& field, const PrimitiveElementCertificate& c);

Rational rational_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

}  // namespace normbasis
