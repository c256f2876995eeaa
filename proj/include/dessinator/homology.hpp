#pragma once

#include <vector>

#include "dessinator/dessin.hpp"
#include "dessinator/perm.hpp"

namespace dessinator {

/// A finite mod-m homology cover of a torsion-free (uniform) dessin: the
/// deck group is (Z_m)^{2g} acting by translations on the second coordinate
/// of the edge set {0..base_edges-1} x (Z_m)^{2g}.
struct HomologyCover {
  Dessin dessin;
  int base_edges = 0;
  int modulus = 0;
  int homology_rank = 0;  // 2g of the base
  /// Schreier cocycle vectors, one per (base edge, generator in {sigma,tau});
  /// entries vanish on spanning-tree edges.
  std::vector<std::vector<int>> sigma_cocycle;
  std::vector<std::vector<int>> tau_cocycle;

  long long deck_order() const;
  /// The 2g commuting deck translations as permutations of the cover edges.
  std::vector<Perm> deck_generators() const;
};

HomologyCover homology_cover_full(const Dessin& base, int modulus,
                                  long long edge_cap = 1000000);

/// Just the covering dessin.
Dessin homology_cover(const Dessin& base, int modulus, long long edge_cap = 1000000);

struct TowerResult {
  std::vector<int> genera;  // genus of each completed iterate
  bool truncated = false;   // true when the edge cap stopped the tower early
};

/// Genus along the tower of iterated mod-m covers.
TowerResult cover_tower_genus(const Dessin& base, int modulus, int levels,
                              long long edge_cap = 1000000);

}  // namespace dessinator
