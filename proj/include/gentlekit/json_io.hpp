#pragma once

// JSON forms of witnesses, classes, Hom certificates and decisions. Strings
// are written in their text form, so reading back needs the quiver.

#include <json.hpp>

#include "gentlekit/bands.hpp"
#include "gentlekit/string_modules.hpp"
#include "gentlekit/tau_decision.hpp"

namespace gentlekit {

  nlohmann::json to_json(WitnessClass const& c);
  WitnessClass   class_from_json(nlohmann::json const& j);

  nlohmann::json to_json(BoundQuiver const& q, Support const& s);
  Support        support_from_json(BoundQuiver const& q, nlohmann::json const& j);

  // {"form", "band", "b1", "omega", "b2", "support", "class"}; the class is
  // included when given.
  nlohmann::json to_json(BoundQuiver const&                 q,
                         WitnessBand const&                 w,
                         std::optional<WitnessClass> const& c = std::nullopt);
  WitnessBand    witness_from_json(BoundQuiver const& q, nlohmann::json const& j);

  nlohmann::json to_json(BoundQuiver const& q, StringWord const& c,
                         StringWord const& d, HomCertificate const& cert);

  nlohmann::json words_to_json(BoundQuiver const& q,
                               std::vector<StringWord> const& words);
  std::vector<StringWord> words_from_json(BoundQuiver const&    q,
                                          nlohmann::json const& j);

  // {"verdict", "brick_census", "brick_count", "witness", "brick_family",
  //  "reduction_trail"}
  nlohmann::json to_json(BoundQuiver const& q, Decision const& d);
  Decision       decision_from_json(BoundQuiver const& q, nlohmann::json const& j);

}  // namespace gentlekit
