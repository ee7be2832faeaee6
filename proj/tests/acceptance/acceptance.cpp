// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "../support/fields.hpp"
#include "../support/gen.hpp"
#include "../support/mat.hpp"
#include "../support/minima_oracle.hpp"
#include "normbasis/cli.hpp"
#include "normbasis/normal_basis.hpp"
#include "normbasis/primitive_element.hpp"

using namespace normbasis;
using testgen::integral;
using testgen::power_field;

namespace {

using ld = long double;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

bool near(const Interval& iv, ld x, ld tol) {
  return static_cast<ld>(iv.lo_d()) - tol <= x && x <= static_cast<ld>(iv.hi_d()) + tol;
}

struct GaloisSetup {
  NumberField field;
  EmbeddingSet es;
  GaloisAction action;
};

// Shared across criteria: field data and the corpus certificates.
struct Context {
  std::map<std::string, GaloisSetup> fields;
  std::map<std::string, NormalBasisCertificate> certs;

  const GaloisSetup& get(const std::string& name) {
    auto it = fields.find(name);
    if (it == fields.end()) {
      auto k = catalog_field(name);
      auto es = compute_embeddings(k);
      auto act = compute_galois_action(k, es);
      it = fields.emplace(name, GaloisSetup{std::move(k), std::move(es), std::move(act)}).first;
    }
    return it->second;
  }

  const NormalBasisCertificate& cert(const std::string& name) {
    auto it = certs.find(name);
    if (it == certs.end()) {
      const auto& s = get(name);
      it = certs.emplace(name, find_normal_basis(s.field, s.es, s.action)).first;
    }
    return it->second;
  }
};

std::vector<std::string> small_corpus() {
  std::vector<std::string> out;
  for (const auto& name : testgen::galois_corpus())
    if (catalog_field(name).degree() <= 4) out.push_back(name);
  return out;
}

FieldElement random_integer(testgen::Gen& g, const NumberField& k, long span) {
  std::vector<Integer> c(k.degree());
  for (;;) {
    bool zero = true;
    for (auto& x : c) {
      x = g.integer(-span, span);
      zero = zero && x == 0;
    }
    if (!zero) return k.from_integral(std::span<const Integer>(c));
  }
}

// Conjugate values of x from independently computed long double roots.
std::vector<oracle::cld> conjugates(const NumberField& k, const FieldElement& x) {
  std::vector<oracle::cld> out;
  for (const auto& z : oracle::roots(k.poly())) {
    oracle::cld v = 0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * z + static_cast<ld>(x[i].get_d());
    out.push_back(v);
  }
  return out;
}

ld max_abs(const std::vector<oracle::cld>& v) {
  ld m = 0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

ld root_bound(const NumberField& k, ld factor) {
  return factor * std::pow(static_cast<ld>(k.abs_disc().get_d()), 1.0L / static_cast<ld>(k.degree()));
}

// Criterion bodies. Each throws Failure with a description on the first miss.

void normal_basis_corpus(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : testgen::galois_corpus()) {
    const auto& s = ctx.get(name);
    const auto& c = ctx.cert(name);
    const auto n = static_cast<ld>(s.field.degree());
    require(c.delta_value != 0, name + ": delta is zero");
    require(delta(s.field, s.action, c.alpha) == c.delta_value, name + ": delta does not recompute");
    require(c.status == kStatusCertified, name + ": status " + c.status);
    for (const auto& v : c.sup_norms) require(v.certainly_le(c.bound), name + ": sup-norm bound not certified");
    require(validate(s.field, s.es, s.action, c).empty(), name + ": certificate does not validate");
    const ld sup = max_abs(conjugates(s.field, c.alpha));
    require(near(sup_norm(s.es, c.alpha), sup, 1e-9L), name + ": sup-norm disagrees with the float oracle");
    require(sup <= root_bound(s.field, n) + 1e-12L, name + ": float oracle exceeds the bound");
  }
  const auto& gi = ctx.get("quadratic(-1)");
  require(ctx.cert("quadratic(-1)").alpha == integral(gi.field, {1, 1}), "Z[i]: generator is not 1+i");
  require(delta(gi.field, gi.action, integral(gi.field, {1, 1})) == 8, "Z[i]: delta(1+i) != 8");
  const auto& z3 = ctx.get("cyclotomic(3)");
  require(delta(z3.field, z3.action, z3.field.theta()) == -3, "Q(zeta3): delta(zeta3) != -3");
  const auto& r2 = ctx.get("quadratic(2)");
  require(delta(r2.field, r2.action, integral(r2.field, {1, 1})) == -16, "Q(sqrt2): delta(1+sqrt2) != -16");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(secs < 60, "corpus took " + std::to_string(secs) + " s");
}

void heights(Context& ctx) {
  for (const auto& name : testgen::galois_corpus()) {
    const auto& s = ctx.get(name);
    const auto& c = ctx.cert(name);
    require(c.height.certainly_le(c.height_bound), name + ": height bound not certified");
    if (s.field.abs_disc() > 1) {
      require(c.height.certainly_lt(c.height_reference) && c.height_below_reference, name + ": height above the main term");
    }
    ld h = 0;
    for (const auto& z : conjugates(s.field, c.alpha)) h += std::log(std::max<ld>(1, std::abs(z)));
    h /= static_cast<ld>(s.field.degree());
    require(near(c.height, h, 1e-9L), name + ": height disagrees with the float oracle");
    const ld n = static_cast<ld>(s.field.degree());
    require(h <= std::log(static_cast<ld>(s.field.abs_disc().get_d())) / n + std::log(n) + 1e-12L,
            name + ": float height above the bound");
  }
}

void conjugate_sums(Context& ctx) {
  testgen::Gen g(20231);
  for (const auto& name : testgen::galois_corpus()) {
    const auto& s = ctx.get(name);
    const auto& k = s.field;
    std::vector<FieldElement> betas{ctx.cert(name).alpha};
    while (betas.size() < 101) {
      const auto b = random_integer(g, k, 3);
      if (is_normal_basis(k, s.action, b)) betas.push_back(b);
    }
    for (const auto& b : betas) {
      const Rational q = k.trace(k.mul(b, apply_automorphism(k, s.action, s.action.conj_index, b)));
      ld direct = 0;
      for (const auto& z : conjugates(k, b)) direct += std::norm(z);
      require(std::abs(direct - static_cast<ld>(q.get_d())) <= 1e-9L * (1 + direct),
              name + ": Tr(b conj(b)) disagrees with the float conjugate sum");
      Rational qn = 1;
      for (std::size_t i = 0; i < k.degree(); ++i) qn *= q;
      require(qn >= Rational(k.abs_disc()), name + ": q^n < |D| for " + b.to_poly().to_string());
      const auto r = check_lower_bound(k, s.es, s.action, b);
      require(r.pass && r.exact_sum && *r.exact_sum == q, name + ": lower-bound report disagrees");
    }
  }
}

void primitive_elements(Context&) {
  std::vector<NumberField> fields;
  for (const auto& name : testgen::galois_corpus()) fields.push_back(catalog_field(name));
  fields.push_back(power_field({-2, 0, 0, 1}, "cube root of 2"));
  fields.push_back(power_field({-2, 0, 0, 0, 1}, "fourth root of 2"));
  for (const auto& k : fields) {
    const std::string name = k.label();
    const auto es = compute_embeddings(k);
    const auto c = find_primitive_element(k, es);
    require(k.minimal_polynomial(c.alpha).degree() == static_cast<int>(k.degree()), name + ": minpoly degree");
    require(compose_mod(c.minpoly, c.alpha.to_poly(), k.poly()).is_zero(), name + ": minpoly does not annihilate");
    require(c.status == kStatusCertified, name + ": status " + c.status);
    for (const auto& v : c.sup_norms) require(v.certainly_le(c.bound), name + ": sup-norm bound not certified");
    require(validate(k, es, c).empty(), name + ": certificate does not validate");
    const ld sup = max_abs(conjugates(k, c.alpha));
    require(sup <= root_bound(k, static_cast<ld>(k.degree() - 1)) + 1e-12L, name + ": float oracle exceeds bound");
    if (k.degree() == 3) {
      require(c.alpha == k.theta(), "cube root of 2: alpha is not theta");
      require(near(c.bound, 2 * std::cbrt(108.0L), 1e-12L), "cube root of 2: bound is not 2*108^(1/3)");
      require(std::abs(c.bound.mid_d() - 9.524) < 1e-3, "cube root of 2: bound is not about 9.524");
    }
  }
}

void product_inequality(Context& ctx) {
  testgen::Gen g(5150);
  const auto names = small_corpus();
  for (int t = 0; t < 50; ++t) {
    const auto& name = names[static_cast<std::size_t>(t) % names.size()];
    const auto& s = ctx.get(name);
    const auto i = ideal_from_generators(s.field, {random_integer(g, s.field, 2)});
    const auto j = ideal_from_generators(s.field, {random_integer(g, s.field, 2)});
    const std::size_t n = s.field.degree();
    for (std::size_t k = 1; k <= n; ++k) {
      const auto r = check_product_inequality(s.field, s.es, i, j, k, n + 1 - k, &s.action);
      require(passed(r.status), name + " pair " + std::to_string(t) + " k=" + std::to_string(k) + ": " +
                                    to_string(r.status) + " " + r.lhs.to_string() + " vs " + r.rhs.to_string());
    }
  }
  const auto& gi = ctx.get("quadratic(-1)");
  const auto p = ideal_from_generators(gi.field, {integral(gi.field, {1, 1})});
  const auto r = check_product_inequality(gi.field, gi.es, p, p, 1, 2, &gi.action);
  require(passed(r.status) && r.exact && r.equality, "(1+i): equality not decided exactly");
  require(near(r.lhs, 2, 1e-12L) && near(r.rhs, 2, 1e-12L), "(1+i): lambda_2((1+i)^2) or the product is not 2");
  require(near(r.minima_i.lambdas[0], std::sqrt(2.0L), 1e-12L), "(1+i): lambda_1 is not sqrt 2");
}

void corollary_bounds(Context& ctx) {
  testgen::Gen g(6060);
  for (const auto& name : testgen::galois_corpus()) {
    const auto& s = ctx.get(name);
    std::vector<FractionalIdeal> ideals{unit_ideal(s.field)};
    for (int t = 0; t < 25; ++t) ideals.push_back(ideal_from_generators(s.field, {random_integer(g, s.field, 2)}));
    for (std::size_t t = 0; t < ideals.size(); ++t) {
      const auto r = check_corollary_bounds(s.field, s.es, ideals[t]);
      require(passed(r.general) && passed(r.sup_norm) && passed(r.minkowski),
              name + " ideal " + std::to_string(t) + ": " + to_string(r.general) + "/" + to_string(r.sup_norm) + "/" +
                  to_string(r.minkowski));
    }
  }
  const auto& gi = ctx.get("quadratic(-1)");
  const auto r = check_corollary_bounds(gi.field, gi.es, unit_ideal(gi.field));
  const ld pi = std::acos(-1.0L);
  require(near(r.lambda_n_pow, 1, 1e-12L) && near(r.minima_product, 1, 1e-12L), "Z[i]: minima are not 1");
  require(near(r.sup_norm_rhs, 16 / (pi * pi), 1e-12L), "Z[i]: sup-norm bound is not (2/pi)^2 4");
  require(near(r.minkowski_rhs, 4 / pi, 1e-12L), "Z[i]: Minkowski bound is not 4/pi");
  require(r.sup_norm == CheckStatus::Certified && r.minkowski == CheckStatus::Certified, "Z[i]: not certified");
}

void oracle_equivalence(Context& ctx) {
  testgen::Gen g(7007);
  for (const auto& name : small_corpus()) {
    const auto& s = ctx.get(name);
    const auto& k = s.field;
    std::vector<FractionalIdeal> ideals{unit_ideal(k)};
    for (int t = 0; t < 3; ++t) ideals.push_back(ideal_from_generators(k, {random_integer(g, k, 2)}));
    for (std::size_t t = 0; t < ideals.size(); ++t) {
      const std::string tag = name + " ideal " + std::to_string(t);
      std::vector<RatVector> rows;
      for (const auto& b : ideal_basis(k, ideals[t])) rows.push_back(b.coords());
      const auto bf = oracle::brute_force(k.poly(), rows, k.degree() <= 2 ? 12 : 6);
      const auto m = successive_minima(k, s.es, ideals[t]);
      require(m.exhaustive, tag + ": enumeration not exhaustive");
      require(bf.lambdas.size() == k.degree(), tag + ": oracle found too few vectors");
      std::vector<std::vector<Integer>> wit;
      for (std::size_t i = 0; i < k.degree(); ++i) {
        require(near(m.lambdas[i], bf.lambdas[i], 1e-9L), tag + ": lambda_" + std::to_string(i + 1) + " " +
                                                              m.lambdas[i].to_string() + " vs oracle " +
                                                              std::to_string(static_cast<double>(bf.lambdas[i])));
        require(ideal_contains(k, ideals[t], m.witnesses[i]), tag + ": witness outside the ideal");
        const ld w = max_abs(conjugates(k, m.witnesses[i]));
        require(w <= static_cast<ld>(m.lambdas[i].hi_d()) + 1e-9L, tag + ": witness longer than its minimum");
        const Integer den = common_denominator(m.witnesses[i].coords());
        std::vector<Integer> row;
        for (const auto& c : m.witnesses[i].coords()) row.push_back(Rational(c * den).get_num());
        wit.push_back(row);
      }
      require(oracle::int_rank(wit) == k.degree(), tag + ": witnesses are dependent");
    }
  }
}

void products_span(Context&) {
  std::vector<NumberField> fields{catalog_field("quadratic(-1)"), power_field({-2, 0, 0, 1}),
                                  catalog_field("cyclotomic(5)"), power_field({-1, -1, 0, 0, 0, 1}),
                                  catalog_field("cyclotomic(7)")};
  testgen::Gen g(8088);
  auto family = [&](const NumberField& k, std::size_t size) {
    for (;;) {
      std::vector<FieldElement> xs;
      std::vector<std::vector<Integer>> rows;
      for (std::size_t i = 0; i < size; ++i) {
        RatVector v(k.degree());
        std::vector<Integer> r;
        for (auto& c : v) {
          c = g.integer(-3, 3);
          r.push_back(c.get_num());
        }
        xs.emplace_back(v);
        rows.push_back(r);
      }
      if (oracle::int_rank(rows) == size) return xs;
    }
  };
  for (int t = 0; t < 200; ++t) {
    const auto& k = fields[static_cast<std::size_t>(t) % fields.size()];
    const long n = static_cast<long>(k.degree());
    const long a = g.integer(1, n);
    const long b = g.integer(n + 1 - a, n);
    const auto xs = family(k, static_cast<std::size_t>(a));
    const auto ys = family(k, static_cast<std::size_t>(b));
    require(products_span_check(k, xs, ys), "degree " + std::to_string(n) + " pair " + std::to_string(t));
    std::vector<std::vector<Integer>> prods;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        const FieldElement xy = k.mul(x, y);
        std::vector<Integer> r;
        for (const auto& c : xy.coords()) r.push_back(c.get_num());
        prods.push_back(r);
      }
    require(oracle::int_rank(prods) == k.degree(), "rank oracle disagrees on pair " + std::to_string(t));
  }
}

// Simplex points by recursion, ordered by an explicit comparator.
std::vector<std::vector<long>> reference_order(std::size_t n, long d) {
  std::vector<std::vector<long>> pts;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long left) {
    if (cur.size() == n) {
      pts.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(d);
  auto total = [](const std::vector<long>& p) {
    long s = 0;
    for (long v : p) s += v;
    return s;
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& x, const auto& y) {
    if (total(x) != total(y)) return total(x) < total(y);
    return x > y;
  });
  return pts;
}

void avoidance_contract(Context&) {
  testgen::Gen g(9119);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(g.integer(1, 5));
    const auto d = static_cast<unsigned>(g.integer(0, 4));
    std::vector<std::vector<long>> forms;
    for (unsigned f = 0; f < d; ++f) {
      std::vector<long> w(n + 1);
      bool zero;
      do {
        zero = true;
        for (auto& x : w) {
          x = g.integer(-2, 2);
          zero = zero && x == 0;
        }
      } while (zero);
      forms.push_back(w);
    }
    auto value = [&](std::span<const long> a) {
      Rational v = 1;
      for (const auto& w : forms) {
        long s = w[n];
        for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i];
        v *= s;
      }
      return v;
    };
    std::vector<FieldElement> fam;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(n);
      e[i] = 1;
      fam.emplace_back(e);
    }
    const auto ref = reference_order(n, d);
    require(simplex_order(n, d) == ref, "visit order differs for n=" + std::to_string(n) + " d=" + std::to_string(d));
    const auto r = simplex_search(fam, {d, value});
    std::size_t first = 0;
    while (value(ref[first]) == 0) ++first;
    require(r.coords == ref[first] && r.visited == first + 1, "map " + std::to_string(t) + ": wrong first hit");
    long sum = 0;
    for (long v : r.coords) sum += v;
    require(sum <= static_cast<long>(d), "map " + std::to_string(t) + ": coordinates exceed the degree");
  }
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void robustness(Context&) {
  const auto ng = cli_run({"normal-basis", "--poly", "x^3-2"});
  require(ng.code == cli::kNotGalois && ng.err.find("NotGalois") != std::string::npos,
          "x^3-2 normal-basis: exit " + std::to_string(ng.code) + " " + ng.err);
  const auto red = cli_run({"field-info", "--poly", "x^2-1"});
  require(red.code == cli::kInputError && (red.err.find("ReduciblePolynomial") != std::string::npos ||
                                           red.err.find("NotSquarefree") != std::string::npos),
          "x^2-1: exit " + std::to_string(red.code) + " " + red.err);
  try {
    NumberField::make(FieldSpec{testgen::poly({-1, 0, 1}), std::nullopt, "", false});
    require(false, "x^2-1 built a field");
  } catch (const Error& e) {
    require(e.code() == ErrorCode::ReduciblePolynomial || e.code() == ErrorCode::NotSquarefree,
            std::string("x^2-1 raised ") + e.what());
  }

  const std::vector<std::vector<std::string>> commands{
      {"normal-basis", "--field", "catalog:quadratic(-1)"},
      {"normal-basis", "--field", "catalog:cyclotomic(5)"},
      {"normal-basis", "--field", "catalog:biquadratic(2,3)", "--exhaustive"},
      {"primitive-element", "--poly", "x^3-2"},
      {"field-info", "--poly", "x^4-2"},
      {"ideal-minima", "--field", "catalog:cyclotomic(8)", "--ideal", "x+2"},
      {"check-product", "--field", "catalog:quadratic(-1)", "--ideal", "1+x"},
      {"check-bounds", "--field", "catalog:quadratic(5)", "--ideal", "random", "--seed", "42"},
  };
  const auto dir = std::filesystem::temp_directory_path() / ("normbasis_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  int index = 0;
  for (auto args : commands) {
    args.push_back("--json");
    const auto first = cli_run(args);
    const std::string tag = args[0] + " " + args[2];
    require(first.code == cli::kOk, tag + ": exit " + std::to_string(first.code) + " " + first.err);
    const auto again = cli_run(args);
    require(again.out == first.out, tag + ": output is not deterministic");
    const auto path = (dir / ("report" + std::to_string(index++) + ".json")).string();
    std::ofstream(path, std::ios::binary) << first.out;
    const auto v = cli_run({std::string("--verify"), path});
    require(v.code == cli::kOk, tag + ": verify exit " + std::to_string(v.code) + " " + v.err);
  }
  // a tampered certificate must be rejected
  auto tampered = cli_run({"normal-basis", "--field", "catalog:quadratic(-1)", "--json"}).out;
  const auto at = tampered.find("\"delta\": \"8\"");
  require(at != std::string::npos, "delta 8 missing from the Z[i] certificate");
  tampered.replace(at, 12, "\"delta\": \"9\"");
  const auto path = (dir / "tampered.json").string();
  std::ofstream(path, std::ios::binary) << tampered;
  const auto v = cli_run({std::string("--verify"), path});
  require(v.code == cli::kCheckFailed, "tampered certificate: verify exit " + std::to_string(v.code));
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Context&)>>> criteria{
      {"normal-basis certificates on the Galois corpus, with anchors", normal_basis_corpus},
      {"height bounds of the corpus generators", heights},
      {"conjugate-sum lower bound for 100 random normal-basis integers per field", conjugate_sums},
      {"primitive-element certificates, including x^3-2 and x^4-2", primitive_elements},
      {"product inequality on 50 random principal ideal pairs and the (1+i) equality", product_inequality},
      {"corollary and Minkowski bounds on the corpus and random ideals", corollary_bounds},
      {"successive minima agree with brute-force enumeration", oracle_equivalence},
      {"product families span the field on 200 random pairs", products_span},
      {"simplex search order and degree bound on 1000 maps", avoidance_contract},
      {"error exits and byte-stable --verify round trips", robustness},
  };
  Context ctx;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second(ctx);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "/" << criteria.size() << "] " << criteria[i].first << " ("
              << timing << ")";
    if (!ok) std::cout << ": " << detail;
    std::cout << std::endl;
    failed += ok ? 0 : 1;
  }
  return failed ? 1 : 0;
}
