#pragma once

// Exhaustive corpus of small bound quivers for the property and acceptance
// tests.

#include <cstddef>
#include <vector>

#include "gentlekit/bound_quiver.hpp"

namespace gentlekit::testing {

  struct CorpusStats {
    std::size_t candidates    = 0;  // before gentleness filtering
    std::size_t accepted      = 0;  // gentle and finite-dimensional
    std::size_t non_isomorphic = 0;
  };

  // Every bound quiver with 1..max_vertices vertices and 0..max_arrows arrows
  // whose relations form a partial matching of composable pairs, kept when
  // gentle and finite-dimensional; one per isomorphism class unless
  // all_labellings is set. Vertices are named "1".."n", arrows "a".."h" in
  // generation order.
  std::vector<BoundQuiver> gentle_corpus(std::size_t  max_vertices,
                                         std::size_t  max_arrows,
                                         CorpusStats* stats          = nullptr,
                                         bool         all_labellings = false);

  // The unfiltered candidates: at most two arrows in and out per vertex,
  // relations a partial matching. Not reduced up to isomorphism.
  std::vector<BoundQuiver> bound_quivers(std::size_t max_vertices,
                                         std::size_t max_arrows);

  // Same quiver with arrows and relations reversed.
  BoundQuiver opposite(BoundQuiver const& q);

  // Ids replaced through the given permutations (new name of vertex i is
  // "v" + perm[i], of arrow j is "x" + perm[j]), input order shuffled too.
  BoundQuiver relabel(BoundQuiver const&              q,
                      std::vector<std::size_t> const& vertex_perm,
                      std::vector<std::size_t> const& arrow_perm);

}  // namespace gentlekit::testing
