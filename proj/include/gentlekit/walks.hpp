#pragma once

// Letters, strings and their substring factorizations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gentlekit/bound_quiver.hpp"

namespace gentlekit {

  enum class Direction : std::uint8_t { Direct, Inverse };

  struct Letter {
    ArrowIndex arrow;
    Direction  direction = Direction::Direct;

    bool   is_direct() const noexcept { return direction == Direction::Direct; }
    Letter inverse() const noexcept {
      return {arrow, is_direct() ? Direction::Inverse : Direction::Direct};
    }
    bool operator==(Letter const&) const = default;
  };

  VertexIndex source(BoundQuiver const& q, Letter l);
  VertexIndex target(BoundQuiver const& q, Letter l);

  // Total order on letters: (arrow id, direct < inverse).
  std::size_t letter_key(BoundQuiver const& q, Letter l);

  // A word in the letters of a quiver, or the trivial word at a vertex.
  // Values carry no validity guarantee; use is_string.
  class StringWord {
   public:
    StringWord() = default;

    static StringWord trivial(VertexIndex v) {
      StringWord w;
      w.start_ = v;
      return w;
    }
    // letters must be non-empty
    static StringWord of(BoundQuiver const& q, std::vector<Letter> letters);

    bool        is_trivial() const noexcept { return letters_.empty(); }
    std::size_t length() const noexcept { return letters_.size(); }
    VertexIndex start() const noexcept { return start_; }

    std::span<Letter const> letters() const noexcept { return letters_; }
    Letter const& operator[](std::size_t i) const { return letters_[i]; }

    bool operator==(StringWord const&) const = default;

   private:
    VertexIndex         start_ = 0;
    std::vector<Letter> letters_;
  };

  VertexIndex source(BoundQuiver const& q, StringWord const& w);
  VertexIndex target(BoundQuiver const& q, StringWord const& w);

  // Vertices at positions 0..n of w.
  std::vector<VertexIndex> vertex_walk(BoundQuiver const& q, StringWord const& w);

  enum class StringDefect { NotComposable, NotReduced, HitsRelation };

  std::string_view describe(StringDefect d) noexcept;

  // The first position i (junction of letters i and i+1, 0-based) at which w
  // fails to be a string. Throws QuiverError on an unknown arrow or vertex.
  struct DefectSite {
    StringDefect defect;
    std::size_t  position;
  };
  std::optional<DefectSite> string_defect(BoundQuiver const& q,
                                          StringWord const&  w);

  // Whether the junction "left then right" is allowed inside a string.
  // Assumes target(left) == source(right).
  std::optional<StringDefect>
  junction_defect(BoundQuiver const& q, Letter left, Letter right);

  bool is_string(BoundQuiver const& q, StringWord const& w);

  StringWord inverse(BoundQuiver const& q, StringWord const& w);

  struct ConcatResult {
    std::optional<StringWord>   word;
    std::optional<StringDefect> defect;
    explicit operator bool() const noexcept { return word.has_value(); }
  };

  // Throws QuiverError if t(u) != s(v); u and v are assumed to be strings.
  ConcatResult concat(BoundQuiver const& q, StringWord const& u,
                      StringWord const& v);

  // Letters begin+1..end of w (trivial when begin == end).
  StringWord substring(BoundQuiver const& q,
                       StringWord const&  w,
                       std::size_t        begin,
                       std::size_t        end);

  // Lexicographic comparison by letter keys; trivial words precede
  // non-trivial ones and are ordered by vertex id.
  bool word_less(BoundQuiver const& q, StringWord const& a,
                 StringWord const& b);

  // Least of w and its inverse.
  StringWord canonical(BoundQuiver const& q, StringWord const& w);

  //////////////////////////////////////////////////////////////////////////
  // Factorizations
  //////////////////////////////////////////////////////////////////////////

  enum class FactorKind { Top, Bottom };

  // The substring occupying positions begin..end of its host.
  struct Factorization {
    std::size_t begin;
    std::size_t end;
    FactorKind  kind;
    bool operator==(Factorization const&) const = default;
  };

  bool is_top(StringWord const& w, std::size_t begin, std::size_t end);
  bool is_bottom(StringWord const& w, std::size_t begin, std::size_t end);

  // In increasing (begin, end) order.
  std::vector<Factorization> factorizations(StringWord const& w,
                                            FactorKind        kind);

  //////////////////////////////////////////////////////////////////////////
  // Enumeration
  //////////////////////////////////////////////////////////////////////////

  // Every string of length n (not identified with its inverse), obtained by
  // single-letter right extension of the previous layer.
  std::vector<StringWord> extend_layer(BoundQuiver const&             q,
                                       std::vector<StringWord> const& layer);
  std::vector<StringWord> trivial_strings(BoundQuiver const& q);

  // Layers 0..max_len of all strings; no gentleness precondition.
  std::vector<std::vector<StringWord>> string_layers(BoundQuiver const& q,
                                                     std::size_t max_len);

  // Strings of length <= max_len up to inversion, canonical representatives,
  // sorted by (length, canonical form). Requires q gentle and
  // finite-dimensional.
  std::vector<StringWord> enumerate_strings(BoundQuiver const& q,
                                            std::size_t        max_len);

  //////////////////////////////////////////////////////////////////////////
  // Text form: "a b^-1 a", "e(v)"
  //////////////////////////////////////////////////////////////////////////

  std::string format_word(BoundQuiver const& q, StringWord const& w);
  // Parses a letter sequence; composability is not checked.
  StringWord parse_word(BoundQuiver const& q, std::string_view text);

}  // namespace gentlekit
