#include "normbasis/avoidance.hpp"

namespace normbasis {

namespace {

void fill(std::vector<long>& cur, std::size_t pos, long remaining, std::vector<std::vector<long>>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (long a = remaining; a >= 0; --a) {
    cur[pos] = a;
    fill(cur, pos + 1, remaining - a, out);
  }
}

FieldElement combine(const std::vector<FieldElement>& family, const std::vector<long>& a) {
  FieldElement x(RatVector(family.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) x += Rational(a[i]) * family[i];
  return x;
}

}  // namespace

std::vector<std::vector<long>> simplex_order(std::size_t n, unsigned d) {
  std::vector<std::vector<long>> out;
  if (n == 0) return out;
  std::vector<long> cur(n, 0);
  for (long t = 0; t <= static_cast<long>(d); ++t) fill(cur, 0, t, out);
  return out;
}

SearchResult simplex_search(const std::vector<FieldElement>& family, const PolynomialMap& map, SearchMode mode,
                            const EmbeddingSet* es) {
  if (family.empty()) throw Error(ErrorCode::BadParameter, "empty family");
  if (mode == SearchMode::Exhaustive && es == nullptr)
    throw Error(ErrorCode::BadParameter, "exhaustive search needs embeddings");
  std::optional<SearchResult> best;
  std::size_t visited = 0;
  for (const auto& a : simplex_order(family.size(), map.degree)) {
    ++visited;
    const Rational v = map.evaluate(a);
    if (v == 0) continue;
    SearchResult r{a, combine(family, a), v, visited, std::nullopt};
    if (mode == SearchMode::FirstHit) return r;
    r.sup_norm = sup_norm(*es, r.element);
    if (!best || mpfr_less_p(r.sup_norm->hi().get(), best->sup_norm->hi().get())) best = std::move(r);
  }
  if (!best)
    throw Error(ErrorCode::ExhaustedSimplex,
                "map vanishes on all " + std::to_string(visited) + " simplex points of degree " + std::to_string(map.degree));
  best->visited = visited;
  return *best;
}

}  // namespace normbasis
