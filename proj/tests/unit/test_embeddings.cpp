#include <doctest.h>

#include "../support/gen.hpp"
#include "../support/mat.hpp"
#include "normbasis/embeddings.hpp"

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

bool near(const Interval& iv, double x, double tol = 1e-12) { return iv.lo_d() <= x + tol && x - tol <= iv.hi_d(); }

}  // namespace

TEST_CASE("roots and ordering") {
  const auto gi = power_field({1, 0, 1});
  const auto es = compute_embeddings(gi, 64);
  CHECK(es.r1() == 0);
  CHECK(es.r2() == 1);
  CHECK(near(es.root(0).im, 1.0));
  CHECK(near(es.root(1).im, -1.0));
  CHECK(es.root(0).re.contains_zero());

  const auto r2 = power_field({-2, 0, 1});
  const auto e2 = compute_embeddings(r2);
  CHECK(near(e2.root(0).re, -1.4142135623730951));
  CHECK(near(e2.root(1).re, 1.4142135623730951));
  CHECK(e2.root(0).im.is_point());

  const auto c = compute_embeddings(power_field({-2, 0, 0, 1}));
  CHECK(c.r1() == 1);
  CHECK(c.r2() == 1);
  CHECK(near(c.root(0).re, 1.2599210498948732));
  CHECK(c.root(1).im.lo_d() > 0);
  CHECK_THROWS_AS(compute_embeddings(gi, 16), Error);
}

TEST_CASE("eval, sup-norm, height, covolume examples") {
  const auto r2 = power_field({-2, 0, 1});
  const auto es = compute_embeddings(r2);
  const ComplexBox one = eval_embedding(es, 0, r2.one());
  CHECK(one.re.is_point());
  CHECK(near(one.re, 1.0, 0));
  const ComplexBox x = eval_embedding(r2, es, 1, r2.theta(), 100);
  CHECK(near(x.re, 1.4142135623730951));
  CHECK(x.re.width().hi_d() < 1e-29);
  CHECK(eval_embedding(es, 1, r2.from_rational(Rational(3, 8))).re.is_point());
  CHECK(eval_embedding(es, 1, r2.from_rational(Rational(3, 7))).re.contains(Rational(3, 7)));
  CHECK(near(sup_norm(es, r2.one()), 1.0, 0));
  CHECK(near(sup_norm(es, elem(r2, {1, 1})), 2.414213562373095));
  const auto gi = power_field({1, 0, 1});
  const auto eg = compute_embeddings(gi);
  CHECK(near(sup_norm(eg, gi.theta()), 1.0));
  CHECK(near(height(es, r2.one()), 0.0, 0));
  CHECK(near(height(es, r2.from_rational(2)), std::log(2.0)));
  CHECK(near(height(eg, elem(gi, {1, 1})), 0.34657359027997264));
  CHECK(near(covolume(gi, 1), 1.0));
  CHECK(near(covolume(catalog_field("quadratic(2)"), 1), 2.8284271247461903));
  CHECK(near(covolume(gi, 2), 2.0));
}

TEST_CASE("trace and norm lie in the embedding sums and products") {
  testgen::Gen g(23);
  for (const char* name : {"cyclotomic(5)", "cyclotomic(7)", "biquadratic(2,3)", "quadratic(-3)"}) {
    const auto k = catalog_field(name);
    auto es = compute_embeddings(k, 64);
    for (int t = 0; t < 5; ++t) {
      RatVector v(k.degree());
      for (auto& x : v) x = g.rational();
      const FieldElement a(v);
      ComplexBox sum = ComplexBox::point(0, 96), prod = ComplexBox::point(1, 96);
      for (std::size_t i = 0; i < k.degree(); ++i) {
        const auto b = eval_embedding(es, i, a);
        sum = sum + b;
        prod = prod * b;
      }
      CHECK(sum.re.contains(k.trace(a)));
      CHECK(sum.im.contains(0));
      CHECK(prod.re.contains(k.norm(a)));
    }
  }
}

TEST_CASE("refinement nests") {
  for (std::initializer_list<long> f : {std::initializer_list<long>{-2, 0, 0, 1}, {1, 1, 1, 1, 1}, {-1, -3, 0, 1}}) {
    const auto k = power_field(f);
    const auto lo = compute_embeddings(k, 64);
    const auto hi = refine(k, lo, 512);
    CHECK(hi.precision() >= 512);
    for (std::size_t i = 0; i < k.degree(); ++i) {
      CHECK(hi.root(i).re.subset_of(lo.root(i).re));
      CHECK(hi.root(i).im.subset_of(lo.root(i).im));
    }
  }
}

TEST_CASE("close roots are separated") {
  // x^5 - 2(10x - 1)^2 has two roots within about 1e-3 of 1/10
  const auto k = power_field({-2, 40, -200, 0, 0, 1});
  const auto es = compute_embeddings(k, 64);
  CHECK(es.r1() == 3);
  CHECK(es.root(0).re.certainly_lt(es.root(1).re));
  CHECK(es.root(1).re.certainly_lt(es.root(2).re));
}
