#include <doctest.h>

#include "../support/fields.hpp"
#include "../support/gen.hpp"
#include "normbasis/normal_basis.hpp"

using namespace normbasis;
using testgen::integral;

namespace {

struct Setup {
  NumberField k;
  EmbeddingSet es;
  GaloisAction act;
};

Setup setup(const std::string& name) {
  auto k = catalog_field(name);
  auto es = compute_embeddings(k);
  auto act = compute_galois_action(k, es);
  return {std::move(k), std::move(es), std::move(act)};
}

bool near(const Interval& iv, double x, double tol = 1e-12) { return iv.lo_d() <= x + tol && x - tol <= iv.hi_d(); }

}  // namespace

TEST_CASE("delta examples") {
  const auto gi = setup("quadratic(-1)");
  CHECK(delta(gi.k, gi.act, integral(gi.k, {1, 1})) == 8);
  CHECK(delta(gi.k, gi.act, gi.k.one()) == 0);
  CHECK_FALSE(is_normal_basis(gi.k, gi.act, gi.k.one()));
  CHECK_FALSE(is_normal_basis(gi.k, gi.act, gi.k.theta()));
  CHECK(is_normal_basis(gi.k, gi.act, integral(gi.k, {1, 1})));
  const auto r2 = setup("quadratic(2)");
  CHECK(delta(r2.k, r2.act, integral(r2.k, {1, 1})) == -16);
  const auto z3 = setup("cyclotomic(3)");
  CHECK(delta(z3.k, z3.act, z3.k.theta()) == -3);
}

TEST_CASE("find_normal_basis examples") {
  const auto gi = setup("quadratic(-1)");
  const auto c = find_normal_basis(gi.k, gi.es, gi.act);
  CHECK(c.alpha == integral(gi.k, {1, 1}));
  CHECK(c.delta_value == 8);
  CHECK(c.status == kStatusCertified);
  CHECK(near(c.sup_norms[0], 1.4142135623730951));
  CHECK(near(c.bound, 4.0));
  CHECK(c.conjugate_sum.exact_sum == Rational(4));
  CHECK(c.conjugate_sum.pass);
  CHECK(validate(gi.k, gi.es, gi.act, c).empty());

  const auto z3 = setup("cyclotomic(3)");
  const auto c3 = find_normal_basis(z3.k, z3.es, z3.act);
  CHECK(c3.alpha == z3.k.theta());
  CHECK(c3.delta_value == -3);
  CHECK(c3.conjugate_sum.exact_sum == Rational(2));

  const auto r2 = setup("quadratic(2)");
  const auto c2 = find_normal_basis(r2.k, r2.es, r2.act);
  CHECK(c2.alpha == integral(r2.k, {1, 1}));
  CHECK(c2.delta_value == -16);
  CHECK(near(c2.sup_norms[1], 2.414213562373095));
  CHECK(c2.conjugate_sum.exact_sum == Rational(6));
}

TEST_CASE("lower bound examples and errors") {
  const auto gi = setup("quadratic(-1)");
  CHECK(check_lower_bound(gi.k, gi.es, gi.act, integral(gi.k, {1, 1})).exact_sum == Rational(4));
  CHECK_THROWS_AS(check_lower_bound(gi.k, gi.es, gi.act, gi.k.from_rational(Rational(1, 2))), Error);
  CHECK_THROWS_AS(check_lower_bound(gi.k, gi.es, gi.act, gi.k.theta()), Error);
}

TEST_CASE("delta properties") {
  testgen::Gen g(55);
  for (const char* name : {"quadratic(5)", "cyclotomic(5)", "biquadratic(2,3)", "cyclotomic(8)"}) {
    const auto s = setup(name);
    const std::size_t n = s.k.degree();
    for (int t = 0; t < 6; ++t) {
      RatVector v(n);
      for (auto& x : v) x = g.rational(4, 3);
      const FieldElement x(v);
      const Rational d = delta(s.k, s.act, x);
      CHECK((d != 0) == conjugates_independent(s.k, s.act, x));
      for (std::size_t j = 0; j < n; ++j) CHECK(abs(delta(s.k, s.act, apply_automorphism(s.k, s.act, j, x))) == abs(d));
      const Rational c = g.rational(5, 4);
      Rational cn = 1;
      for (std::size_t i = 0; i < n; ++i) cn *= c;
      CHECK(delta(s.k, s.act, c * x) == cn * d);
    }
  }
}

TEST_CASE("corpus certificates validate") {
  for (const auto& name : testgen::galois_corpus()) {
    const auto s = setup(name);
    const auto c = find_normal_basis(s.k, s.es, s.act);
    INFO(name);
    CHECK(c.status == kStatusCertified);
    CHECK(c.delta_value != 0);
    CHECK(validate(s.k, s.es, s.act, c).empty());
    const auto e = find_normal_basis(s.k, s.es, s.act, SearchMode::Exhaustive);
    CHECK(e.delta_value != 0);
    CHECK(mpfr_lessequal_p(sup_norm(s.es, e.alpha).hi().get(), sup_norm(s.es, c.alpha).hi().get()));
  }
}
