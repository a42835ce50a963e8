#pragma once

// Reference implementations used to check the library. They work on raw
// letter codes (2 * arrow index + 1 for an inverse letter) and share no code
// with the walk, band or enumeration modules.

#include <cstddef>
#include <optional>
#include <vector>

#include "gentlekit/bound_quiver.hpp"
#include "gentlekit/walks.hpp"

namespace gentlekit::testing {

  using Code = std::vector<int>;

  Code       encode(StringWord const& w);
  StringWord decode(BoundQuiver const& q, Code const& c);

  bool oracle_is_string(BoundQuiver const& q, Code const& w);

  // w is a string whose square is a string, w is not a proper power, and w
  // has letters of both directions.
  bool oracle_is_band(BoundQuiver const& q, Code const& w);

  // Every non-trivial string of length <= max_len, each orientation listed.
  std::vector<Code> oracle_strings(BoundQuiver const& q, std::size_t max_len);

  // Depth-first search over all letter words of length <= max_len,
  // pruning prefixes that are not strings. Returns a band of least length.
  std::optional<Code> brute_force_band(BoundQuiver const& q, std::size_t max_len);

  // Strings of length <= max_len up to inversion whose endomorphism space
  // over the rationals, computed by the linear backend, is one-dimensional.
  std::size_t oracle_brick_count(BoundQuiver const& q, std::size_t max_len);

}  // namespace gentlekit::testing
