#include <doctest.h>

#include "../support/fields.hpp"
#include "../support/gen.hpp"
#include "../support/mat.hpp"
#include "normbasis/ideals.hpp"

using namespace normbasis;
using testgen::integral;
using testgen::mat;

TEST_CASE("ideal_from_generators examples") {
  const auto k = catalog_field("quadratic(-1)");
  const auto o = ideal_from_generators(k, {k.one()});
  CHECK(o.hnf == IntMatrix::identity(2));
  CHECK(o.den == 1);
  const auto p = ideal_from_generators(k, {integral(k, {1, 1})});
  CHECK(p.hnf == mat<Integer>({{1, 1}, {0, 2}}));
  CHECK(p.den == 1);
  const auto h = ideal_from_generators(k, {k.from_rational(Rational(1, 2))});
  CHECK(h.hnf == IntMatrix::identity(2));
  CHECK(h.den == 2);
  CHECK_THROWS_AS(ideal_from_generators(k, {k.zero()}), Error);
}

TEST_CASE("ideal_mul and norm examples") {
  const auto k = catalog_field("quadratic(-1)");
  const auto o = unit_ideal(k);
  const auto p = ideal_from_generators(k, {integral(k, {1, 1})});
  CHECK(ideal_mul(k, p, o) == p);
  CHECK(ideal_mul(k, p, p).hnf == mat<Integer>({{2, 0}, {0, 2}}));
  CHECK(ideal_mul(k, p, p) == ideal_from_generators(k, {k.from_rational(2)}));
  const auto half = ideal_from_generators(k, {k.from_rational(Rational(1, 2))});
  CHECK(ideal_mul(k, half, ideal_from_generators(k, {k.from_rational(2)})) == o);
  CHECK(ideal_norm(k, o) == 1);
  CHECK(ideal_norm(k, p) == 2);
  CHECK(ideal_norm(k, ideal_from_generators(k, {k.from_rational(2)})) == 4);
}

TEST_CASE("norms multiply, principal norms, commutativity and associativity") {
  testgen::Gen g(41);
  for (const char* name : {"quadratic(-1)", "quadratic(5)", "cyclotomic(5)", "biquadratic(2,3)", "cyclotomic(7)"}) {
    const auto k = catalog_field(name);
    auto rnd = [&] {
      std::vector<Integer> c(k.degree());
      for (auto& x : c) x = g.integer(-3, 3);
      if (std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; })) c[0] = 1;
      return k.from_integral(std::span<const Integer>(c));
    };
    for (int t = 0; t < 6; ++t) {
      const FieldElement x = rnd(), y = rnd(), z = rnd();
      const auto ix = ideal_from_generators(k, {x}), iy = ideal_from_generators(k, {y}),
                 iz = ideal_from_generators(k, {z});
      CHECK(ideal_norm(k, ix) == abs(k.norm(x)));
      CHECK(ideal_norm(k, ideal_mul(k, ix, iy)) == ideal_norm(k, ix) * ideal_norm(k, iy));
      CHECK(ideal_mul(k, ix, iy) == ideal_mul(k, iy, ix));
      CHECK(ideal_mul(k, ideal_mul(k, ix, iy), iz) == ideal_mul(k, ix, ideal_mul(k, iy, iz)));
      CHECK(ideal_mul(k, ix, iy) == ideal_from_generators(k, {k.mul(x, y)}));
      CHECK(ideal_contains(k, ix, k.mul(x, z)));
    }
  }
}

TEST_CASE("two-generator ideal") {
  // (2, 1 + i) = (1 + i) in Z[i]
  const auto k = catalog_field("quadratic(-1)");
  CHECK(ideal_from_generators(k, {k.from_rational(2), integral(k, {1, 1})}) ==
        ideal_from_generators(k, {integral(k, {1, 1})}));
  CHECK(ideal_scale(k, unit_ideal(k), Rational(3, 2)) == ideal_from_generators(k, {k.from_rational(Rational(3, 2))}));
}
