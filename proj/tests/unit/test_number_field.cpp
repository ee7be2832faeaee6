#include <doctest.h>

#include "../support/gen.hpp"
#include "../support/mat.hpp"
#include "normbasis/number_field.hpp"

using namespace normbasis;
using testgen::poly;

namespace {

NumberField power_field(std::initializer_list<long> f) { return NumberField::make({poly(f), std::nullopt, "", false}); }

FieldElement elem(const NumberField& k, std::initializer_list<long> c) {
  RatVector v(k.degree());
  std::size_t i = 0;
  for (long x : c) v[i++] = x;
  return FieldElement(v);
}

FieldElement random_element(testgen::Gen& g, const NumberField& k, long span = 5) {
  RatVector v(k.degree());
  for (auto& x : v) x = g.rational(span, 3);
  return FieldElement(v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadParameter;
}

}  // namespace

TEST_CASE("make_field signatures and discriminants") {
  const auto gi = power_field({1, 0, 1});
  CHECK(gi.degree() == 2);
  CHECK(gi.r1() == 0);
  CHECK(gi.r2() == 1);
  CHECK(gi.disc() == -4);
  const auto golden = power_field({-1, -1, 1});
  CHECK(golden.r1() == 2);
  CHECK(golden.disc() == 5);
  const auto z8 = power_field({1, 0, 0, 0, 1});
  CHECK(z8.r2() == 2);
  CHECK(z8.disc() == 256);
}

TEST_CASE("make_field rejects bad input") {
  CHECK(code_of([] { power_field({-1, 0, 1}); }) == ErrorCode::ReduciblePolynomial);
  CHECK(code_of([] { power_field({1, 2, 1}); }) == ErrorCode::NotSquarefree);
  CHECK(code_of([] { NumberField::make({UniPoly(RatVector{1, 0, 2}), std::nullopt, "", false}); }) ==
        ErrorCode::BadParameter);
}

TEST_CASE("mul, trace, norm examples") {
  const auto gi = power_field({1, 0, 1});
  CHECK(gi.mul(gi.theta(), gi.theta()) == gi.from_rational(-1));
  const auto r2 = power_field({-2, 0, 1});
  CHECK(r2.mul(elem(r2, {1, 1}), elem(r2, {1, -1})) == r2.from_rational(-1));
  const auto a = elem(r2, {3, -7});
  CHECK(r2.mul(a, r2.one()) == a);
  CHECK(gi.trace(gi.one()) == 2);
  CHECK(gi.trace(gi.theta()) == 0);
  CHECK(r2.trace(elem(r2, {1, 1})) == 2);
  CHECK(r2.norm(elem(r2, {1, 1})) == -1);
}

TEST_CASE("trace linear, norm multiplicative, minpoly annihilates") {
  testgen::Gen g(17);
  for (const auto& f : {std::initializer_list<long>{-2, 0, 0, 1}, {1, 1, 1, 1, 1}, {1, 0, 0, 0, 1}, {-2, 0, 0, 0, 0, 1}}) {
    const auto k = power_field(f);
    for (int t = 0; t < 15; ++t) {
      const auto a = random_element(g, k), b = random_element(g, k);
      const Rational c = g.rational();
      CHECK(k.trace(a + c * b) == k.trace(a) + c * k.trace(b));
      CHECK(k.norm(k.mul(a, b)) == k.norm(a) * k.norm(b));
      const UniPoly m = k.minimal_polynomial(a);
      CHECK(k.degree() % static_cast<std::size_t>(m.degree()) == 0);
      CHECK(k.from_poly(compose_mod(m, a.to_poly(), k.poly())).is_zero());
    }
  }
}

TEST_CASE("minimal_polynomial examples") {
  const auto k = power_field({-2, 0, 0, 1});
  CHECK(k.minimal_polynomial(k.theta()) == k.poly());
  CHECK(k.minimal_polynomial(k.from_rational(Rational(3, 4))) == UniPoly(RatVector{Rational(-3, 4), 1}));
  const auto r2 = power_field({-2, 0, 1});
  CHECK(r2.minimal_polynomial(elem(r2, {1, 1})) == poly({-1, -2, 1}));
}

TEST_CASE("verify_integral_basis") {
  CHECK(verify_integral_basis(poly({1, 0, 1}), RatMatrix::identity(2)) == -4);
  RatMatrix golden(2, 2);
  golden(0, 0) = 1;
  golden(1, 0) = Rational(1, 2);
  golden(1, 1) = Rational(1, 2);
  CHECK(verify_integral_basis(poly({-5, 0, 1}), golden) == 5);
  RatMatrix bad = RatMatrix::identity(2);
  bad(1, 1) = Rational(1, 2);
  CHECK(code_of([&] { verify_integral_basis(poly({-5, 0, 1}), bad); }) == ErrorCode::NotAnOrder);
}

TEST_CASE("power basis discriminant matches the resultant") {
  for (const auto& f : {std::initializer_list<long>{-2, 0, 0, 1}, {1, 1, 1, 1, 1}, {3, -1, 0, 2, 0, 1}, {-2, 0, 0, 0, 1}})
    CHECK(Rational(verify_integral_basis(poly(f), RatMatrix::identity(poly(f).degree()))) == poly_discriminant(poly(f)));
}

TEST_CASE("catalog fields") {
  CHECK(catalog_field("quadratic(-1)").disc() == -4);
  CHECK(catalog_field("quadratic(5)").disc() == 5);
  CHECK(catalog_field("quadratic(-3)").disc() == -3);
  CHECK(catalog_field("quadratic(2)").disc() == 8);
  const auto z5 = catalog_field("cyclotomic(5)");
  CHECK(z5.degree() == 4);
  CHECK(z5.disc() == 125);
  CHECK(catalog_field("cyclotomic(7)").disc() == -16807);
  CHECK(catalog_field("cyclotomic(8)").disc() == 256);
  CHECK(catalog_field("cyclotomic(3)").disc() == -3);
  const auto bq = catalog_field("biquadratic(2,3)");
  CHECK(bq.degree() == 4);
  CHECK(bq.disc() == 2304);
  CHECK(bq.maximal());
  CHECK(code_of([] { catalog_field("cyclotomic(6)"); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { catalog_field("quadratic(4)"); }) == ErrorCode::BadParameter);
}

TEST_CASE("integral coordinates") {
  const auto k = catalog_field("quadratic(5)");
  const FieldElement w = k.basis_element(1);
  CHECK(k.mul(w, w) == w + k.one());
  CHECK(k.in_order(w));
  CHECK_FALSE(k.in_order(k.from_rational(Rational(1, 2))));
  CHECK(k.is_algebraic_integer(w));
}
