#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "normbasis/embeddings.hpp"

namespace normbasis {

/// Map on coordinates (a_1..a_n) relative to a fixed family, of total degree
/// at most `degree`. evaluate returns an exact value; only its vanishing matters.
struct PolynomialMap {
  unsigned degree = 0;
  std::function<Rational(std::span<const long>)> evaluate;
};

enum class SearchMode { FirstHit, Exhaustive };

struct SearchResult {
  std::vector<long> coords;
  FieldElement element;
  Rational value;
  std::size_t visited = 0;
  /// Certified sup-norm (exhaustive mode only).
  std::optional<Interval> sup_norm;
};

/// Points of the simplex {a in N^n : sum a_i <= d} in visit order: total
/// degree ascending, then lexicographically descending ((1,0) before (0,1)).
std::vector<std::vector<long>> simplex_order(std::size_t n, unsigned d);

/// First point of the simplex where the map does not vanish. In exhaustive
/// mode (which needs `es`), the nonvanishing point with the smallest certified
/// sup-norm upper bound, ties going to the earlier point. Throws ExhaustedSimplex.
SearchResult simplex_search(const std::vector<FieldElement>& family, const PolynomialMap& map,
                            SearchMode mode = SearchMode::FirstHit, const EmbeddingSet* es = nullptr);

}  // namespace normbasis
