#pragma once

#include <string>
#include <vector>

#include "normbasis/number_field.hpp"

namespace testgen {

inline const std::vector<std::string>& galois_corpus() {
  static const std::vector<std::string> names{"quadratic(-1)", "quadratic(2)",  "quadratic(5)",  "quadratic(-3)",
                                              "cyclotomic(5)", "cyclotomic(7)", "cyclotomic(8)", "biquadratic(2,3)"};
  return names;
}

inline normbasis::NumberField power_field(std::initializer_list<long> f, std::string label = "") {
  normbasis::RatVector c;
  for (long v : f) c.emplace_back(v);
  return normbasis::NumberField::make({normbasis::UniPoly(c), std::nullopt, std::move(label), false});
}

inline normbasis::FieldElement elem(const normbasis::NumberField& k, std::initializer_list<long> c) {
  normbasis::RatVector v(k.degree());
  std::size_t i = 0;
  for (long x : c) v[i++] = x;
  return normbasis::FieldElement(v);
}

/// Element with the given integral-basis coordinates.
inline normbasis::FieldElement integral(const normbasis::NumberField& k, std::initializer_list<long> c) {
  std::vector<normbasis::Integer> v(k.degree());
  std::size_t i = 0;
  for (long x : c) v[i++] = x;
  return k.from_integral(std::span<const normbasis::Integer>(v));
}

}  // namespace testgen
