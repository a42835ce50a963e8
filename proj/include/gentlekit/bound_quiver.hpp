#pragma once

// Bound quivers with length-two monomial relations: data model, text/JSON
// parsing and the gentleness validator.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gentlekit {

  using VertexIndex = std::size_t;
  using ArrowIndex  = std::size_t;

  class QuiverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by the text parser; carries a 1-based source position.
  class ParseError : public QuiverError {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  struct ArrowSpec {
    std::string id;
    std::string source;
    std::string target;
  };

  struct Arrow {
    std::string id;
    VertexIndex source;
    VertexIndex target;
    bool operator==(Arrow const&) const = default;
  };

  // The path first·second lies in the ideal (left-to-right composition).
  struct Relation {
    ArrowIndex first;
    ArrowIndex second;
    auto operator<=>(Relation const&) const = default;
  };

  // Token characters accepted for vertex and arrow ids.
  bool is_valid_id(std::string_view id) noexcept;

  class BoundQuiver {
   public:
    BoundQuiver() = default;

    // Throws QuiverError on duplicate ids, undeclared endpoints,
    // non-composable or duplicate relations.
    BoundQuiver(std::vector<std::string>                          vertices,
                std::vector<ArrowSpec> const&                     arrows,
                std::vector<std::pair<std::string, std::string>> const& relations);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    std::span<std::string const> vertices() const noexcept { return vertices_; }
    std::span<Arrow const>       arrows() const noexcept { return arrows_; }
    std::string const& vertex_id(VertexIndex v) const { return vertices_.at(v); }
    Arrow const&       arrow(ArrowIndex a) const { return arrows_.at(a); }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<ArrowIndex>  find_arrow(std::string_view id) const;
    VertexIndex                vertex_index(std::string_view id) const;
    ArrowIndex                 arrow_index(std::string_view id) const;

    // Sorted by (first, second) in arrow index order.
    std::span<Relation const> relations() const noexcept { return relations_; }
    bool is_relation(ArrowIndex first, ArrowIndex second) const {
      return relation_table_[first * arrows_.size() + second];
    }

    // Position of an id in the lexicographic order of all vertex (arrow) ids.
    // Every deterministic choice in the library goes through these ranks.
    std::size_t vertex_rank(VertexIndex v) const { return vertex_rank_[v]; }
    std::size_t arrow_rank(ArrowIndex a) const { return arrow_rank_[a]; }

    std::span<VertexIndex const> vertices_in_canonical_order() const noexcept {
      return vertex_order_;
    }
    std::span<ArrowIndex const> arrows_in_canonical_order() const noexcept {
      return arrow_order_;
    }

    // Canonically ordered.
    std::span<ArrowIndex const> arrows_from(VertexIndex v) const {
      return out_[v];
    }
    std::span<ArrowIndex const> arrows_into(VertexIndex v) const {
      return in_[v];
    }

    // Same ids, arrows in the same order, same relations.
    bool operator==(BoundQuiver const& other) const;

   private:
    std::vector<std::string>              vertices_;
    std::vector<Arrow>                    arrows_;
    std::vector<Relation>                 relations_;
    std::vector<bool>                     relation_table_;
    std::vector<std::size_t>              vertex_rank_;
    std::vector<std::size_t>              arrow_rank_;
    std::vector<VertexIndex>              vertex_order_;
    std::vector<ArrowIndex>               arrow_order_;
    std::vector<std::vector<ArrowIndex>>  out_;
    std::vector<std::vector<ArrowIndex>>  in_;
  };

  //////////////////////////////////////////////////////////////////////////
  // Parsing and serialization
  //////////////////////////////////////////////////////////////////////////

  // Accepts either the text record format
  //   vertices: 1 2 ; arrows: a: 1 -> 2 ; relations: a b, ...
  // or the JSON object format; JSON is detected by a leading '{'.
  BoundQuiver parse_quiver(std::string_view text);
  BoundQuiver parse_quiver_text(std::string_view text);
  BoundQuiver quiver_from_json(nlohmann::json const& j);

  std::string    to_text(BoundQuiver const& q);
  nlohmann::json to_json(BoundQuiver const& q);

  //////////////////////////////////////////////////////////////////////////
  // Gentleness
  //////////////////////////////////////////////////////////////////////////

  enum class GentleCondition {
    DegreeBound,           // G1: at most two arrows in and two out
    ForwardContinuation,   // G2
    BackwardContinuation,  // G3
    FiniteDimension        // G4: no relation-free oriented cycle
  };

  std::string_view condition_code(GentleCondition c) noexcept;
  GentleCondition  condition_from_code(std::string_view code);

  struct Violation {
    GentleCondition condition;
    std::string     location;  // "vertex <id>", "arrow <id>" or "cycle <ids>"
    std::string     detail;
    auto operator<=>(Violation const&) const = default;
  };

  struct GentleReport {
    bool                   is_gentle             = true;
    bool                   is_finite_dimensional = true;
    std::vector<Violation> violations;  // sorted

    bool accepted() const noexcept {
      return is_gentle && is_finite_dimensional;
    }
    bool operator==(GentleReport const&) const = default;
  };

  GentleReport validate_gentle(BoundQuiver const& q);

  nlohmann::json to_json(GentleReport const& report);
  GentleReport   report_from_json(nlohmann::json const& j);

  // Thrown by every operation that needs a gentle finite-dimensional input.
  class RefusedInput : public std::runtime_error {
   public:
    enum class Reason { NotGentle, InfiniteDimensional };
    RefusedInput(Reason reason, GentleReport report);
    Reason              reason() const noexcept { return reason_; }
    GentleReport const& report() const noexcept { return report_; }

   private:
    Reason       reason_;
    GentleReport report_;
  };

  void require_gentle(BoundQuiver const& q);

}  // namespace gentlekit
