#pragma once

// Deciding τ-tilting finiteness of a gentle algebra. The algebra is
// τ-tilting infinite exactly when it has a band; the decision always comes
// with evidence: the complete list of bricks in the finite case, a reduced
// witness band (and, for two cycles joined by a non-trivial path, an
// explicit infinite family of bricks) in the infinite case.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gentlekit/bands.hpp"
#include "gentlekit/bound_quiver.hpp"
#include "gentlekit/walks.hpp"

namespace gentlekit {

  // Sub-bound-quiver without the given arrows and vertices (and the arrows
  // at those vertices); relations through a removed arrow are dropped.
  // Throws QuiverError on unknown ids.
  BoundQuiver quotient_by_ideal(BoundQuiver const&              q,
                                std::vector<std::string> const& kill_vertices,
                                std::vector<std::string> const& kill_arrows);

  // Keeps exactly the given vertices and arrows.
  BoundQuiver restrict_to(BoundQuiver const& q, Support const& keep);

  struct IdempotentReduction {
    BoundQuiver  quiver;
    GentleReport report;  // of the reduced quiver
    bool         gentle() const noexcept { return report.accepted(); }
  };

  // The bound quiver of eΛe for e = 1 - e_v. Arrows away from v are kept;
  // every non-zero path u -> v -> ... -> v -> w with u, w != v becomes a
  // shortcut arrow named by joining its arrow ids with '.'. Requires q
  // finite-dimensional.
  IdempotentReduction idempotent_reduction(BoundQuiver const& q,
                                           std::string const& vertex);

  // b = (b')^ε ω (b'')^ε ω^-1 with ε the direction of the first letter of ω,
  // b' and b'' oriented so that their first letters are direct; returns
  // b, b^2, ..., b^n. Requires a TwoCycles witness with non-trivial ω.
  std::vector<StringWord> brick_family(BoundQuiver const& q,
                                       WitnessBand const& w,
                                       std::size_t        n);

  // Canonical strings of length <= 2 |Q_1| that are bricks. Requires a
  // band-free gentle quiver.
  std::vector<StringWord> brick_census(BoundQuiver const& q);
  std::size_t             census_bound(BoundQuiver const& q) noexcept;

  enum class Verdict { TauFinite, TauInfinite };

  struct ReductionStep {
    enum class Kind { Quotient, Idempotent, Recognize };
    Kind                        kind;
    std::optional<BoundQuiver>  quiver;      // Quotient, Idempotent
    std::string                 vertex;      // Idempotent
    std::optional<WitnessClass> recognized;  // Recognize
    bool operator==(ReductionStep const&) const = default;
  };

  struct Decision {
    Verdict                     verdict = Verdict::TauFinite;
    std::vector<StringWord>     brick_census;
    std::optional<WitnessBand>  witness;
    std::optional<WitnessClass> witness_class;
    std::vector<StringWord>     brick_family;
    std::vector<ReductionStep>  reduction_trail;
    bool operator==(Decision const&) const = default;
  };

  struct DecideOptions {
    std::size_t family_size = 4;
  };

  // Throws RefusedInput unless q is gentle and finite-dimensional.
  Decision decide(BoundQuiver const& q, DecideOptions const& options = {});

}  // namespace gentlekit
