#pragma once

#include <vector>

#include "normbasis/embeddings.hpp"

namespace normbasis {

/// Automorphisms of a Galois field. images[j] = g_j with sigma_j(theta) = g_j(theta);
/// embedding j of K equals embedding 0 composed with sigma_j, so images[0] = X.
struct GaloisAction {
  std::vector<FieldElement> images;
  /// table[a][b] = index of sigma_a o sigma_b.
  std::vector<std::vector<std::size_t>> table;
  /// Automorphism induced by complex conjugation.
  std::size_t conj_index = 0;

  std::size_t order() const { return images.size(); }
};

/// Recovers the n automorphisms by lattice reduction on high-precision root
/// values; each image is checked exactly (f(g_j) = 0 mod f). Throws NotGalois
/// with the number of roots of f found in K.
GaloisAction compute_galois_action(const NumberField& field, const EmbeddingSet& es);

/// sigma_j(x) = x(g_j) mod f.
FieldElement apply_automorphism(const NumberField& field, const GaloisAction& action, std::size_t j,
                                const FieldElement& x);

/// Rebuilds the composition table from the images and checks the group axioms
/// and the conjugation index. Throws NotClosed with a witness pair.
std::vector<std::vector<std::size_t>> verify_group(const NumberField& field, const EmbeddingSet& es,
                                                   GaloisAction& action);

}  // namespace normbasis
