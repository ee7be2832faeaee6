#include <doctest.h>

#include "../support/fields.hpp"
#include "../support/gen.hpp"
#include "normbasis/avoidance.hpp"

using namespace normbasis;

TEST_CASE("visit order") {
  const auto o = simplex_order(2, 2);
  const std::vector<std::vector<long>> want{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(o == want);
  CHECK(simplex_order(3, 0) == std::vector<std::vector<long>>{{0, 0, 0}});
  CHECK(simplex_order(4, 3).size() == 35);  // C(7, 3)
}

TEST_CASE("search examples") {
  const auto k = catalog_field("quadratic(-1)");
  const std::vector<FieldElement> fam{k.one(), k.theta()};
  // constant map, degree 0
  const auto c = simplex_search(fam, {0, [](std::span<const long>) { return Rational(5); }});
  CHECK(c.coords == std::vector<long>{0, 0});
  CHECK(c.element.is_zero());
  // first coordinate map, degree 1
  const auto e = simplex_search(fam, {1, [](std::span<const long> a) { return Rational(a[0]); }});
  CHECK(e.coords == std::vector<long>{1, 0});
  CHECK(e.element == k.one());
  CHECK(e.visited == 2);
  // (a, b) -> a b, degree 2: first hit (1, 1)
  const auto p = simplex_search(fam, {2, [](std::span<const long> a) { return Rational(a[0] * a[1]); }});
  CHECK(p.coords == std::vector<long>{1, 1});
  CHECK(p.visited == 5);
  CHECK_THROWS_AS(simplex_search(fam, {2, [](std::span<const long>) { return Rational(0); }}), Error);
}

TEST_CASE("exhaustive mode picks the smallest sup-norm") {
  const auto k = catalog_field("quadratic(2)");
  const auto es = compute_embeddings(k);
  const std::vector<FieldElement> fam{k.one(), k.theta()};
  // nonzero unless a = 0: first hit is 1, but 2 * 1 + 0 and others are larger
  const auto r = simplex_search(fam, {2, [](std::span<const long> a) { return Rational(a[1]); }}, SearchMode::Exhaustive, &es);
  CHECK(r.coords == std::vector<long>{0, 1});
  const auto f = simplex_search(fam, {2, [](std::span<const long> a) { return Rational(a[0] + a[1] >= 2 ? 1 : 0); }},
                                SearchMode::Exhaustive, &es);
  // candidates of degree 2: 2, 1 + sqrt2, 2 sqrt2 -> 2 has sup-norm 2 < 2.41 < 2.83
  CHECK(f.coords == std::vector<long>{2, 0});
}

TEST_CASE("random product-of-linear-forms maps respect the visit order and the degree") {
  testgen::Gen g(909);
  const auto k = catalog_field("cyclotomic(5)");
  std::vector<FieldElement> fam;
  for (std::size_t i = 0; i < 4; ++i) fam.push_back(k.basis_element(i));
  for (int t = 0; t < 200; ++t) {
    const auto d = static_cast<unsigned>(g.integer(0, 4));
    std::vector<std::vector<long>> forms;
    for (unsigned f = 0; f < d; ++f) {
      std::vector<long> w(5);
      for (auto& x : w) x = g.integer(-2, 2);
      forms.push_back(w);
    }
    PolynomialMap map{d, [&](std::span<const long> a) {
                        Rational v = 1;
                        for (const auto& w : forms) {
                          long s = w[4];
                          for (std::size_t i = 0; i < 4; ++i) s += w[i] * a[i];
                          v *= s;
                        }
                        return v;
                      }};
    bool zero_poly = false;
    for (const auto& w : forms) zero_poly = zero_poly || std::all_of(w.begin(), w.end(), [](long x) { return x == 0; });
    if (zero_poly) continue;
    const auto r = simplex_search(fam, map);
    long sum = 0;
    for (long a : r.coords) sum += a;
    CHECK(sum <= static_cast<long>(d));
    // everything visited earlier vanishes
    const auto order = simplex_order(4, d);
    for (std::size_t i = 0; i + 1 < r.visited; ++i) CHECK(map.evaluate(order[i]) == 0);
    CHECK(order[r.visited - 1] == r.coords);
  }
}
