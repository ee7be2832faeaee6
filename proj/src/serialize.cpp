#include "normbasis/serialize.hpp"

namespace normbasis {

namespace {

template <typename T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : m.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
Json list_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json elements_json(const NumberField& field, const std::vector<FieldElement>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(field, x));
  return out;
}

Json small_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw Error(ErrorCode::ParseError, "expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw Error(ErrorCode::ParseError, "expected an integer");
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) { return z.get_str(); }
Json to_json(const RatMatrix& m) { return matrix_json(m); }
Json to_json(const IntMatrix& m) { return matrix_json(m); }

Json to_json(const Interval& iv) {
  Json j;
  j["lo"] = iv.lo_str();
  j["hi"] = iv.hi_str();
  j["bits"] = static_cast<long>(iv.prec());
  return j;
}

Json to_json(const ComplexBox& b) {
  Json j;
  j["re"] = to_json(b.re);
  j["im"] = to_json(b.im);
  return j;
}

Json to_json(const UniPoly& p) { return list_json(p.coeffs()); }

Json to_json(const NumberField& field, const FieldElement& x) {
  Json j;
  j["text"] = x.to_poly().to_string("x");
  j["power"] = list_json(x.coords());
  j["integral"] = list_json(field.integral_coords(x));
  return j;
}

Json to_json(const FieldSpec& spec) {
  Json j;
  Json poly = Json::array();
  for (const auto& c : spec.poly.coeffs()) {
    if (!is_integer(c)) throw Error(ErrorCode::BadParameter, "field polynomial must have integer coefficients");
    poly.push_back(small_integer(c.get_num()));
  }
  j["poly"] = std::move(poly);
  if (spec.basis) j["basis"] = to_json(*spec.basis);
  j["label"] = spec.label;
  j["maximal"] = spec.maximal;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational as a string \"p/q\" or an integer");
}

RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(ErrorCode::ParseError, "expected a nonempty matrix (array of rows)");
  RatMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw Error(ErrorCode::ParseError, "ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

FieldSpec field_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poly") || !j["poly"].is_array())
    throw Error(ErrorCode::ParseError, "field spec needs a \"poly\" coefficient array");
  RatVector coeffs;
  for (const auto& c : j["poly"]) coeffs.emplace_back(integer_from_json(c));
  FieldSpec spec;
  spec.poly = UniPoly(std::move(coeffs));
  if (j.contains("basis") && !j["basis"].is_null()) spec.basis = rat_matrix_from_json(j["basis"]);
  if (j.contains("label")) spec.label = j["label"].get<std::string>();
  if (j.contains("maximal")) spec.maximal = j["maximal"].get<bool>();
  return spec;
}

Json to_json(const EmbeddingSet& es) {
  Json j;
  j["order"] = kEmbeddingOrder;
  j["r1"] = es.r1();
  j["r2"] = es.r2();
  j["bits"] = es.precision();
  Json roots = Json::array();
  for (std::size_t i = 0; i < es.degree(); ++i) roots.push_back(to_json(es.root(i)));
  j["roots"] = std::move(roots);
  return j;
}

Json to_json(const NumberField& field, const GaloisAction& action) {
  Json j;
  j["images"] = elements_json(field, action.images);
  j["table"] = action.table;
  j["conj"] = action.conj_index;
  return j;
}

Json to_json(const FractionalIdeal& ideal) {
  Json j;
  j["hnf"] = to_json(ideal.hnf);
  j["den"] = to_json(ideal.den);
  return j;
}

Json to_json(const NumberField& field, const MinimaResult& m) {
  Json j;
  j["lambdas"] = list_json(m.lambdas);
  j["witnesses"] = elements_json(field, m.witnesses);
  j["witness_norms"] = list_json(m.witness_norms);
  j["exhaustive"] = m.exhaustive;
  j["bits"] = m.precision;
  return j;
}

Json to_json(const NumberField& field, const ProductReport& r) {
  Json j;
  j["k"] = r.k;
  j["l"] = r.l;
  j["lambda_n_ij"] = to_json(r.lhs);
  j["lambda_k_i_times_lambda_l_j"] = to_json(r.rhs);
  j["status"] = to_string(r.status);
  j["exact"] = r.exact;
  j["equality"] = r.equality;
  j["minima_ij"] = to_json(field, r.minima_ij);
  j["minima_i"] = to_json(field, r.minima_i);
  j["minima_j"] = to_json(field, r.minima_j);
  return j;
}

Json to_json(const NumberField& field, const BoundsReport& r) {
  Json j;
  j["ideal_norm"] = to_json(r.ideal_norm);
  j["unit_ball_volume"] = to_json(r.unit_ball_volume);
  Json general;
  general["lambda_n_pow_n"] = to_json(r.lambda_n_pow);
  general["rhs"] = to_json(r.general_rhs);
  general["status"] = to_string(r.general);
  j["general"] = std::move(general);
  Json sup;
  sup["lambda_n_pow_n"] = to_json(r.lambda_n_pow);
  sup["rhs"] = to_json(r.sup_norm_rhs);
  sup["status"] = to_string(r.sup_norm);
  j["sup_norm"] = std::move(sup);
  Json mink;
  mink["minima_product"] = to_json(r.minima_product);
  mink["rhs"] = to_json(r.minkowski_rhs);
  mink["status"] = to_string(r.minkowski);
  j["minkowski"] = std::move(mink);
  j["minima"] = to_json(field, r.minima);
  return j;
}

Json to_json(const NumberField& field, const NormalBasisCertificate& c) {
  Json j;
  j["alpha"] = to_json(field, c.alpha);
  j["coords"] = c.coords;
  j["family"] = elements_json(field, c.family);
  j["family_norms"] = list_json(c.family_norms);
  j["delta"] = to_json(c.delta_value);
  j["bound"] = to_json(c.bound);
  j["sup_norms"] = list_json(c.sup_norms);
  j["height"] = to_json(c.height);
  j["height_bound"] = to_json(c.height_bound);
  Json ref;
  ref["main_term"] = to_json(c.height_reference);
  ref["constant"] = "omitted";
  ref["height_below_main_term"] = c.height_below_reference;
  j["height_reference"] = std::move(ref);
  Json lb;
  lb["exact_sum"] = c.conjugate_sum.exact_sum ? to_json(*c.conjugate_sum.exact_sum) : Json(nullptr);
  lb["sum"] = to_json(c.conjugate_sum.sum);
  lb["abs_disc"] = to_json(c.conjugate_sum.abs_disc);
  lb["pass"] = c.conjugate_sum.pass;
  j["conjugate_sum_bound"] = std::move(lb);
  j["status"] = c.status;
  j["order_relative"] = c.order_relative;
  j["exhaustive"] = c.exhaustive;
  j["bits"] = c.precision;
  return j;
}

Json to_json(const NumberField& field, const PrimitiveElementCertificate& c) {
  Json j;
  j["alpha"] = to_json(field, c.alpha);
  j["coords"] = c.coords;
  j["family"] = elements_json(field, c.family);
  j["family_norms"] = list_json(c.family_norms);
  j["minpoly"] = to_json(c.minpoly);
  j["bound"] = to_json(c.bound);
  j["sup_norms"] = list_json(c.sup_norms);
  j["status"] = c.status;
  j["order_relative"] = c.order_relative;
  j["exhaustive"] = c.exhaustive;
  j["bits"] = c.precision;
  return j;
}

}  // namespace normbasis
