#pragma once

// Bands, the minimal-band search and the reduction of a minimal band to one
// of the two witness forms:
//
//   SimpleCycle  a band through pairwise distinct vertices (type Ã_m),
//   TwoCycles    b' ω b'' ω^-1 with closed strings b', b'' whose squares are
//                not strings, joined by ω, all three repeat-free and
//                meeting only in their end points.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentlekit/bound_quiver.hpp"
#include "gentlekit/walks.hpp"

namespace gentlekit {

  // Smallest-period test on the letter sequence.
  bool is_primitive(std::span<Letter const> letters);

  bool is_band(BoundQuiver const& q, StringWord const& w);

  // Least word among all rotations of w and of its inverse.
  StringWord canonical_band(BoundQuiver const& q, StringWord const& w);

  StringWord rotate(BoundQuiver const& q, StringWord const& w,
                    std::size_t offset);

  // Nodes are letters (index 2 * arrow + inverse); an edge l -> l' for every
  // two-letter string l l'.
  class LetterGraph {
   public:
    explicit LetterGraph(BoundQuiver const& q);

    std::size_t node_count() const noexcept { return successors_.size(); }
    std::span<std::size_t const> successors(std::size_t node) const {
      return successors_[node];
    }
    static std::size_t node_of(Letter l) noexcept {
      return 2 * l.arrow + (l.is_direct() ? 0 : 1);
    }
    static Letter letter_of(std::size_t node) noexcept {
      return {node / 2, node % 2 == 0 ? Direction::Direct : Direction::Inverse};
    }

    // Letters along some directed cycle, if there is one.
    std::optional<std::vector<Letter>> find_cycle() const;

   private:
    std::vector<std::vector<std::size_t>> successors_;
  };

  // Requires q gentle and finite-dimensional (throws RefusedInput).
  bool has_band(BoundQuiver const& q);

  // Least band (among all bands of globally minimal length) found by
  // breadth-first search up to max_len; no gentleness precondition.
  std::optional<StringWord> search_minimal_band(BoundQuiver const& q,
                                                std::size_t max_len);

  std::size_t minimal_band_bound(BoundQuiver const& q) noexcept;

  // Requires q gentle and finite-dimensional; searches to 4 |Q_0|.
  std::optional<StringWord> find_minimal_band(BoundQuiver const& q);

  //////////////////////////////////////////////////////////////////////////
  // Witnesses
  //////////////////////////////////////////////////////////////////////////

  enum class WitnessForm { SimpleCycle = 1, TwoCycles = 2 };

  struct Support {
    std::vector<VertexIndex> vertices;  // sorted by index
    std::vector<ArrowIndex>  arrows;    // sorted by index
    bool operator==(Support const&) const = default;
  };

  struct WitnessBand {
    WitnessForm form = WitnessForm::SimpleCycle;
    // SimpleCycle: the band. TwoCycles: the reassembled b' ω b'' ω^-1.
    StringWord band;
    // TwoCycles only.
    StringWord left_cycle;   // b'
    StringWord connector;    // ω, possibly trivial
    StringWord right_cycle;  // b''
    Support    support;

    bool operator==(WitnessBand const&) const = default;
  };

  Support support_of(BoundQuiver const& q, StringWord const& w);

  WitnessBand make_simple_witness(BoundQuiver const& q, StringWord band);
  // Throws QuiverError if the pieces do not concatenate to a string.
  WitnessBand make_two_cycle_witness(BoundQuiver const& q,
                                     StringWord         left,
                                     StringWord         connector,
                                     StringWord         right);

  // First violated witness invariant, if any.
  std::optional<std::string> witness_defect(BoundQuiver const& q,
                                            WitnessBand const& w);

  // Raised when a step of the reduction that must succeed on a gentle
  // finite-dimensional input does not.
  class ReductionFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // What reduce_band did, step by step.
  struct ReductionTrace {
    std::vector<std::string> steps;
    // Set when the proof's preferred branch in the last case did not
    // validate and the alternative form was returned instead.
    bool used_alternative = false;
  };

  // Requires has_band(q).
  WitnessBand reduce_band(BoundQuiver const& q, ReductionTrace* trace = nullptr);

  //////////////////////////////////////////////////////////////////////////
  // Witness classes
  //////////////////////////////////////////////////////////////////////////

  enum class WitnessClassKind { ATilde, TwoCycle };

  struct WitnessClass {
    WitnessClassKind kind = WitnessClassKind::ATilde;
    std::size_t      m    = 0;  // ATilde
    std::size_t      r    = 0;  // TwoCycle: |b'|, |ω|, |b''|
    std::size_t      s    = 0;
    std::size_t      t    = 0;

    // The s = 0 case, settled by removing the common vertex.
    bool needs_idempotent_reduction() const noexcept {
      return kind == WitnessClassKind::TwoCycle && s == 0;
    }
    bool operator==(WitnessClass const&) const = default;
  };

  class WitnessClassError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Checks the witness against the bound quiver obtained by keeping only the
  // support: for SimpleCycle a relation-free cycle; for TwoCycles exactly the
  // two junction relations with the imposed orientations. Throws
  // WitnessClassError otherwise.
  WitnessClass recognize_witness_class(BoundQuiver const& q,
                                       WitnessBand const& w);

  // m when q is a relation-free, non-oriented cycle on m + 1 >= 2 vertices.
  std::optional<std::size_t> recognize_atilde(BoundQuiver const& q);

}  // namespace gentlekit
