#pragma once

// String modules M(w) as explicit representations, and the dimension of
// Hom(M(c), M(d)) computed two ways: by counting matched top/bottom
// substrings, and by solving the intertwiner equations exactly.

#include <cstddef>
#include <vector>

#include "gentlekit/bound_quiver.hpp"
#include "gentlekit/linalg.hpp"
#include "gentlekit/walks.hpp"

namespace gentlekit {

  // Row-major, entries 0 or 1 (meaningful over every field).
  struct IntMatrix {
    std::size_t       rows = 0;
    std::size_t       cols = 0;
    std::vector<long> entries;

    long  operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    long& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    bool  is_zero() const;
    bool operator==(IntMatrix const&) const = default;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

  struct StringModuleRep {
    StringWord               word;
    std::vector<std::size_t> dimension;  // by vertex index
    // Basis position i of the word lies at vertex position_vertex[i] and is
    // coordinate number coordinate[i] of the space there.
    std::vector<VertexIndex> position_vertex;
    std::vector<std::size_t> coordinate;
    // By arrow index: dimension[target] x dimension[source].
    std::vector<IntMatrix>   arrow_maps;
  };

  // Throws QuiverError if w is not a string over q.
  StringModuleRep string_module(BoundQuiver const& q, StringWord const& w);

  // Products along every relation vanish.
  bool satisfies_relations(BoundQuiver const& q, StringModuleRep const& m);

  enum class Match { Equal, Inverse };

  struct MatchedPair {
    Factorization top;     // of the domain string
    Factorization bottom;  // of the codomain string
    Match         match;
    bool operator==(MatchedPair const&) const = default;
  };

  struct HomCertificate {
    std::size_t              count = 0;
    std::vector<MatchedPair> pairs;
  };

  // Pairs (top factor of c, bottom factor of d) with equal or mutually
  // inverse substrings; trivial substrings match when at the same vertex.
  HomCertificate hom_dim_combinatorial(BoundQuiver const& q,
                                       StringWord const&  c,
                                       StringWord const&  d);

  // Nullity of f_{t(α)} M_c(α) = M_d(α) f_{s(α)} over all arrows α.
  std::size_t hom_dim_linear(BoundQuiver const& q,
                             StringWord const&  c,
                             StringWord const&  d,
                             FieldSpec const&   field = FieldSpec::rationals());

  // End(M(w)) is one-dimensional, decided combinatorially.
  bool is_brick(BoundQuiver const& q, StringWord const& w);

}  // namespace gentlekit
