#include "normbasis/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "normbasis/poly_parser.hpp"
#include "normbasis/serialize.hpp"

namespace normbasis::cli {

namespace {

const std::vector<std::string> kCommands{"field-info",    "normal-basis", "primitive-element",
                                         "ideal-minima", "check-product", "check-bounds"};

struct Request {
  std::string command;
  FieldSpec field;
  std::vector<std::string> ideals;
  std::size_t k = 0, l = 0;  // 0: not given
  unsigned precision = 128;
  bool exhaustive = false;
  std::uint64_t seed = 1;
};

struct Outcome {
  Json result;
  std::string text;
  int code = kOk;
};

Json request_json(const Request& r) {
  Json j;
  j["command"] = r.command;
  j["field"] = to_json(r.field);
  j["ideals"] = r.ideals;
  j["k"] = r.k ? Json(r.k) : Json(nullptr);
  j["l"] = r.l ? Json(r.l) : Json(nullptr);
  j["precision"] = r.precision;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  return j;
}

Request request_from_json(const Json& j) {
  Request r;
  r.command = j.at("command").get<std::string>();
  r.field = field_spec_from_json(j.at("field"));
  r.ideals = j.at("ideals").get<std::vector<std::string>>();
  if (!j.at("k").is_null()) r.k = j["k"].get<std::size_t>();
  if (!j.at("l").is_null()) r.l = j["l"].get<std::size_t>();
  r.precision = j.at("precision").get<unsigned>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, what + ": " + e.what());
  }
}

FieldSpec resolve_field(const std::string& field, const std::string& poly, const std::string& basis) {
  if (!field.empty() && !poly.empty()) throw Error(ErrorCode::BadParameter, "give either --field or --poly, not both");
  FieldSpec spec;
  if (field.rfind("catalog:", 0) == 0) {
    spec = catalog_field(field.substr(8)).spec();
  } else if (!field.empty()) {
    Json j = parse_json(read_file(field), field);
    if (j.contains("request")) j = j["request"]["field"];
    spec = field_spec_from_json(j);
  } else if (!poly.empty()) {
    spec.poly = parse_polynomial(poly);
    spec.label = spec.poly.to_string("x");
  } else {
    throw Error(ErrorCode::BadParameter, "a field is required (--field or --poly)");
  }
  if (!basis.empty()) {
    const std::string text = basis.front() == '[' ? basis : read_file(basis);
    spec.basis = rat_matrix_from_json(parse_json(text, "--basis"));
    spec.maximal = false;
  }
  return spec;
}

std::string brief(const Interval& iv) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", iv.mid_d());
  return buf;
}

std::string coords_text(const std::vector<long>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::vector<FractionalIdeal> build_ideals(const NumberField& field, const Request& req) {
  std::mt19937_64 rng(req.seed);
  std::vector<FractionalIdeal> out;
  for (const auto& text : req.ideals) {
    std::vector<FieldElement> gens;
    if (text == "random") {
      std::uniform_int_distribution<long> pick(-3, 3);
      std::vector<Integer> c(field.degree());
      do {
        for (auto& x : c) x = pick(rng);
      } while (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; }));
      gens.push_back(field.from_integral(std::span<const Integer>(c)));
    } else {
      std::size_t start = 0;
      for (;;) {
        const std::size_t end = text.find(';', start);
        gens.push_back(field.from_poly(parse_polynomial(text.substr(start, end - start))));
        if (end == std::string::npos) break;
        start = end + 1;
      }
    }
    out.push_back(ideal_from_generators(field, gens));
  }
  return out;
}

FractionalIdeal ideal_at(const NumberField& field, const std::vector<FractionalIdeal>& ideals, std::size_t i) {
  if (ideals.empty()) return unit_ideal(field);
  return ideals[std::min(i, ideals.size() - 1)];
}

Outcome field_info(const NumberField& field, const EmbeddingSet& es) {
  Outcome o;
  Json& r = o.result;
  r["degree"] = field.degree();
  r["signature"] = {field.r1(), field.r2()};
  r["disc"] = to_json(field.disc());
  r["basis"] = to_json(field.basis());
  r["maximal"] = field.maximal();
  r["embeddings"] = to_json(es);
  std::ostringstream t;
  t << "field " << field.label() << ": degree " << field.degree() << ", signature (" << field.r1() << "," << field.r2()
    << "), disc " << field.disc() << (field.maximal() ? "" : " (order)") << "\n";
  try {
    const auto action = compute_galois_action(field, es);
    r["galois"] = to_json(field, action);
    t << "galois: yes, conjugation = sigma_" << action.conj_index << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGalois) throw;
    r["galois"] = nullptr;
    r["galois_note"] = e.what();
    t << "galois: no (" << e.what() << ")\n";
  }
  o.text = t.str();
  return o;
}

Outcome normal_basis_cmd(const NumberField& field, const EmbeddingSet& es, const Request& req) {
  const auto action = compute_galois_action(field, es);
  const auto cert =
      find_normal_basis(field, es, action, req.exhaustive ? SearchMode::Exhaustive : SearchMode::FirstHit);
  const auto failures = validate(field, es, action, cert);
  Outcome o;
  o.result = to_json(field, cert);
  o.result["validation"] = failures;
  if (!failures.empty() || !cert.conjugate_sum.pass) o.code = kCheckFailed;
  std::ostringstream t;
  t << "normal basis generator alpha = " << cert.alpha.to_poly().to_string("x") << ", family coords "
    << coords_text(cert.coords) << "\n"
    << "delta = " << to_string(cert.delta_value) << "\n"
    << "max |sigma_i(alpha)| ~ ";
  Interval top = cert.sup_norms.front();
  for (const auto& s : cert.sup_norms) top = max(top, s);
  t << brief(top) << " <= n|D|^(1/n) ~ " << brief(cert.bound) << "\n"
    << "height ~ " << brief(cert.height) << " <= " << brief(cert.height_bound) << "\n"
    << "status " << cert.status << (cert.order_relative ? " (order-relative)" : "") << "\n";
  for (const auto& f : failures) t << "validation failure: " << f << "\n";
  o.text = t.str();
  return o;
}

Outcome primitive_cmd(const NumberField& field, const EmbeddingSet& es, const Request& req) {
  const auto cert = find_primitive_element(field, es, req.exhaustive ? SearchMode::Exhaustive : SearchMode::FirstHit);
  const auto failures = validate(field, es, cert);
  Outcome o;
  o.result = to_json(field, cert);
  o.result["validation"] = failures;
  if (!failures.empty()) o.code = kCheckFailed;
  std::ostringstream t;
  Interval top = cert.sup_norms.front();
  for (const auto& s : cert.sup_norms) top = max(top, s);
  t << "primitive element alpha = " << cert.alpha.to_poly().to_string("x") << ", family coords "
    << coords_text(cert.coords) << "\n"
    << "minpoly " << cert.minpoly.to_string("y") << "\n"
    << "max |sigma_i(alpha)| ~ " << brief(top) << " <= (n-1)|D|^(1/n) ~ " << brief(cert.bound) << "\n"
    << "status " << cert.status << (cert.order_relative ? " (order-relative)" : "") << "\n";
  for (const auto& f : failures) t << "validation failure: " << f << "\n";
  o.text = t.str();
  return o;
}

Outcome minima_cmd(const NumberField& field, const EmbeddingSet& es, const std::vector<FractionalIdeal>& ideals) {
  const auto ideal = ideal_at(field, ideals, 0);
  const auto m = successive_minima(field, es, ideal);
  Outcome o;
  o.result["ideal"] = to_json(ideal);
  o.result["ideal_norm"] = to_json(ideal_norm(field, ideal));
  o.result["minima"] = to_json(field, m);
  std::ostringstream t;
  for (std::size_t i = 0; i < m.lambdas.size(); ++i)
    t << "lambda_" << i + 1 << " ~ " << brief(m.lambdas[i]) << "  witness " << m.witnesses[i].to_poly().to_string("x")
      << "\n";
  if (!m.exhaustive) t << "warning: enumeration was not exhaustive\n";
  o.text = t.str();
  return o;
}

Outcome product_cmd(const NumberField& field, const EmbeddingSet& es, const std::vector<FractionalIdeal>& ideals,
                    const Request& req) {
  const std::size_t n = field.degree();
  std::optional<GaloisAction> action;
  try {
    action = compute_galois_action(field, es);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGalois) throw;
  }
  const auto i = ideal_at(field, ideals, 0);
  const auto j = ideal_at(field, ideals, 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (req.k || req.l) {
    if (!req.k || !req.l) throw Error(ErrorCode::BadParameter, "--k and --l go together");
    pairs.emplace_back(req.k, req.l);
  } else {
    for (std::size_t k = 1; k <= n; ++k) pairs.emplace_back(k, n + 1 - k);
  }
  Outcome o;
  o.result["ideal_i"] = to_json(i);
  o.result["ideal_j"] = to_json(j);
  Json checks = Json::array();
  std::ostringstream t;
  for (const auto& [k, l] : pairs) {
    const auto r = check_product_inequality(field, es, i, j, k, l, action ? &*action : nullptr);
    checks.push_back(to_json(field, r));
    if (r.status == CheckStatus::Fail) o.code = kCheckFailed;
    t << "k=" << k << " l=" << l << ": lambda_n(IJ) ~ " << brief(r.lhs) << " <= lambda_k(I) lambda_l(J) ~ "
      << brief(r.rhs) << "  " << to_string(r.status) << (r.exact ? " (exact)" : "")
      << (r.equality ? " (equality)" : "") << "\n";
  }
  o.result["checks"] = std::move(checks);
  o.text = t.str();
  return o;
}

Outcome bounds_cmd(const NumberField& field, const EmbeddingSet& es, const std::vector<FractionalIdeal>& ideals) {
  const auto ideal = ideal_at(field, ideals, 0);
  const auto r = check_corollary_bounds(field, es, ideal);
  Outcome o;
  o.result["ideal"] = to_json(ideal);
  o.result["bounds"] = to_json(field, r);
  for (auto s : {r.general, r.sup_norm, r.minkowski})
    if (s == CheckStatus::Fail) o.code = kCheckFailed;
  std::ostringstream t;
  t << "lambda_n^n ~ " << brief(r.lambda_n_pow) << " <= " << brief(r.general_rhs) << "  " << to_string(r.general)
    << "\n"
    << "lambda_n^n ~ " << brief(r.lambda_n_pow) << " <= " << brief(r.sup_norm_rhs) << "  " << to_string(r.sup_norm)
    << "\n"
    << "prod lambda_i ~ " << brief(r.minima_product) << " <= " << brief(r.minkowski_rhs) << "  "
    << to_string(r.minkowski) << "\n";
  o.text = t.str();
  return o;
}

Outcome execute(const Request& req) {
  const auto field = NumberField::make(req.field);
  const auto es = compute_embeddings(field, req.precision);
  const auto ideals = build_ideals(field, req);
  Outcome o;
  if (req.command == "field-info") o = field_info(field, es);
  else if (req.command == "normal-basis") o = normal_basis_cmd(field, es, req);
  else if (req.command == "primitive-element") o = primitive_cmd(field, es, req);
  else if (req.command == "ideal-minima") o = minima_cmd(field, es, ideals);
  else if (req.command == "check-product") o = product_cmd(field, es, ideals, req);
  else if (req.command == "check-bounds") o = bounds_cmd(field, es, ideals);
  else throw Error(ErrorCode::BadParameter, "unknown command " + req.command);
  return o;
}

std::string render(const Request& req, const Outcome& o) {
  Json report;
  report["schema"] = kSchema;
  report["request"] = request_json(req);
  report["result"] = o.result;
  return report.dump(2) + "\n";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGalois:
      return kNotGalois;
    case ErrorCode::VerifyMismatch:
      return kCheckFailed;
    default:
      return kInputError;
  }
}

int verify(const std::string& path, std::ostream& out) {
  const std::string stored = read_file(path);
  const Json j = parse_json(stored, path);
  if (!j.contains("schema") || j["schema"] != kSchema || !j.contains("request"))
    throw Error(ErrorCode::ParseError, path + " is not a " + std::string(kSchema) + " report");
  const Request req = request_from_json(j["request"]);
  const Outcome o = execute(req);
  const std::string fresh = render(req, o);
  if (fresh != stored) {
    std::size_t at = 0;
    while (at < fresh.size() && at < stored.size() && fresh[at] == stored[at]) ++at;
    throw Error(ErrorCode::VerifyMismatch, path + " differs from the recomputed report at byte " + std::to_string(at));
  }
  out << "verify: " << path << " OK (" << stored.size() << " bytes, recomputed identically)\n";
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified normal bases, primitive elements and successive minima in number fields", "normbasis"};
  Request req;
  std::string field, poly, basis, verify_path;
  bool json = false;
  long k = 0, l = 0;
  app.add_option("command", req.command, "Command to run")->check(CLI::IsMember(kCommands));
  app.add_option("--field", field, "catalog:NAME (e.g. catalog:cyclotomic(5)) or a field-spec JSON file");
  app.add_option("--poly", poly, "defining polynomial, e.g. \"x^3-2\"");
  app.add_option("--basis", basis, "integral basis rows in power-basis coordinates: JSON matrix or file");
  app.add_option("--ideal", req.ideals,
                 "ideal generators \"g1;g2\" as polynomials in x, or \"random\"; repeat for the second ideal")
      ->allow_extra_args(false);
  app.add_option("--k", k, "index k for check-product")->check(CLI::PositiveNumber);
  app.add_option("--l", l, "index l for check-product")->check(CLI::PositiveNumber);
  app.add_option("--precision", req.precision, "working precision in bits")->capture_default_str();
  app.add_flag("--exhaustive", req.exhaustive, "search the whole simplex for the smallest sup-norm");
  app.add_flag("--json", json, "print the JSON report instead of a summary");
  app.add_option("--verify", verify_path, "recompute a saved JSON report and compare byte for byte");
  app.add_option("--seed", req.seed, "seed for \"random\" ideals")->capture_default_str();

  std::vector<std::string> argv_store{"normbasis"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (!verify_path.empty()) return verify(verify_path, out);
    if (req.command.empty()) throw Error(ErrorCode::BadParameter, "a command is required (see --help)");
    req.field = resolve_field(field, poly, basis);
    req.k = static_cast<std::size_t>(k);
    req.l = static_cast<std::size_t>(l);
    const Outcome o = execute(req);
    if (json)
      out << render(req, o);
    else
      out << o.text;
    return o.code;
  } catch (const Error& e) {
    ErrorCode code = e.code();
    std::string what = e.what();
    if (code == ErrorCode::InternalNonField) {
      code = ErrorCode::ReduciblePolynomial;
      what = std::string(to_string(code)) + ": " + what;
    }
    err << "error: " << what << "\n";
    if (json) {
      Json report;
      report["schema"] = kSchema;
      report["error"] = {{"code", std::string(to_string(code))}, {"message", what}};
      out << report.dump(2) << "\n";
    }
    return exit_code_for(code);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace normbasis::cli
