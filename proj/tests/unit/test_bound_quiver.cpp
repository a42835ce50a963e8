#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "gentlekit/bound_quiver.hpp"

using namespace gentlekit;

TEST_CASE("parse the smallest quivers") {
  auto const a2 = parse_quiver("vertices: 1 2 ; arrows: a: 1 -> 2 ; relations:");
  CHECK(a2.vertex_count() == 2);
  REQUIRE(a2.arrow_count() == 1);
  CHECK(a2.arrow(0).id == "a");
  CHECK(a2.vertex_id(a2.arrow(0).source) == "1");
  CHECK(a2.vertex_id(a2.arrow(0).target) == "2");
  CHECK(a2.relations().empty());

  auto const loop = parse_quiver("vertices: 1 ; arrows: x: 1 -> 1 ; relations: x x");
  REQUIRE(loop.arrow_count() == 1);
  CHECK(loop.is_relation(0, 0));

  auto const kronecker =
      parse_quiver("vertices: 1 2 ; arrows: a: 1 -> 2, b: 1 -> 2 ; relations:");
  CHECK(kronecker.arrow_count() == 2);
  CHECK(kronecker.arrow(1).id == "b");
}

TEST_CASE("text format is whitespace-insensitive and allows omitted sections") {
  auto const a = parse_quiver("vertices:1 2;arrows:a:1->2;relations:");
  auto const b = parse_quiver("  vertices: 1\n 2 ;\n arrows: a : 1 -> 2  # comment\n");
  CHECK(a == b);
  CHECK(parse_quiver("vertices: p").arrow_count() == 0);
}

TEST_CASE("parse errors carry positions") {
  auto position = [](std::string_view text) {
    try {
      parse_quiver(text);
    } catch (ParseError const& e) {
      return std::pair{e.line(), e.column()};
    }
    FAIL("no parse error");
    return std::pair<std::size_t, std::size_t>{};
  };
  CHECK(position("vertices: 1 ; arrows: a: 1 -> 2") == std::pair<std::size_t, std::size_t>{1, 31});
  CHECK(position("vertices: 1 1") == std::pair<std::size_t, std::size_t>{1, 13});
  CHECK(position("vertices: 1 2\n; arrows: a: 1 -> 2, b: 1 -> 2 ; relations: a b").first == 2);
  CHECK(position("arrows: a: 1 -> 2").first == 1);
  CHECK(position("vertices: 1 ; arrows: a 1 -> 1").first == 1);
  CHECK_THROWS_AS(parse_quiver("vertices: 1 ; arrows: x: 1 -> 1 ; relations: x x, x x"),
                  ParseError);
  CHECK_THROWS_AS(parse_quiver("vertices: 1 ; arrows: x: 1 -> 1 ; relations: x y"),
                  ParseError);
}

TEST_CASE("constructor rejects malformed data") {
  CHECK_THROWS_AS(BoundQuiver({"1", "1"}, {}, {}), QuiverError);
  CHECK_THROWS_AS(BoundQuiver({"1"}, {{"a", "1", "2"}}, {}), QuiverError);
  CHECK_THROWS_AS(BoundQuiver({"1", "2"}, {{"a", "1", "2"}}, {{"a", "a"}}), QuiverError);
  CHECK_THROWS_AS(BoundQuiver({"1"}, {{"a", "1", "1"}, {"a", "1", "1"}}, {}), QuiverError);
  CHECK_THROWS_AS(BoundQuiver({"x;y"}, {}, {}), QuiverError);
}

TEST_CASE("vertex and arrow ids live in separate namespaces") {
  auto const q = BoundQuiver({"1", "a"}, {{"a", "1", "a"}}, {});
  CHECK(q.find_vertex("a"));
  CHECK(q.find_arrow("a"));
}

TEST_CASE("JSON schema is equivalent to the text format") {
  auto const text = parse_quiver(
      "vertices: 1 2 ; arrows: a: 1 -> 2, b: 2 -> 2 ; relations: b b");
  auto const json = parse_quiver(
      R"({"vertices": ["1", 2], "arrows": [{"id": "a", "src": 1, "tgt": "2"},
          {"id": "b", "src": "2", "tgt": "2"}], "relations": [["b", "b"]]})");
  CHECK(text == json);
  CHECK(quiver_from_json(to_json(text)) == text);
  CHECK(parse_quiver(to_text(text)) == text);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["1"], "arrows": 3})"), QuiverError);
  CHECK_THROWS_AS(parse_quiver("{"), QuiverError);
}

TEST_CASE("canonical orders are lexicographic in the ids") {
  auto const q = parse_quiver("vertices: z y ; arrows: b: z -> y, a: z -> y");
  CHECK(q.vertex_rank(q.vertex_index("y")) == 0);
  CHECK(q.arrow_rank(q.arrow_index("a")) == 0);
  auto const out = q.arrows_from(q.vertex_index("z"));
  REQUIRE(out.size() == 2);
  CHECK(q.arrow(out[0]).id == "a");
}

TEST_CASE("gentleness of the named examples") {
  auto const a2 = validate_gentle(parse_quiver("vertices: 1 2 ; arrows: a: 1 -> 2"));
  CHECK(a2.is_gentle);
  CHECK(a2.is_finite_dimensional);
  CHECK(a2.violations.empty());

  auto const two_loops = validate_gentle(parse_quiver(
      "vertices: 1 ; arrows: x: 1 -> 1, y: 1 -> 1 ; relations: x x, y y, x y, y x"));
  CHECK_FALSE(two_loops.is_gentle);
  CHECK(two_loops.is_finite_dimensional);
  bool at_x = std::any_of(two_loops.violations.begin(), two_loops.violations.end(),
                          [](Violation const& v) {
                            return v.condition == GentleCondition::ForwardContinuation
                                   && v.location == "arrow x";
                          });
  CHECK(at_x);

  auto const free_loop = validate_gentle(parse_quiver("vertices: 1 ; arrows: x: 1 -> 1"));
  CHECK(free_loop.is_gentle);
  CHECK_FALSE(free_loop.is_finite_dimensional);
  REQUIRE(free_loop.violations.size() == 1);
  CHECK(free_loop.violations[0].condition == GentleCondition::FiniteDimension);
  CHECK_THROWS_AS(require_gentle(parse_quiver("vertices: 1 ; arrows: x: 1 -> 1")),
                  RefusedInput);
}

TEST_CASE("degree bound and continuation violations") {
  auto const star = validate_gentle(
      parse_quiver("vertices: 1 2 ; arrows: a: 1 -> 2, b: 1 -> 2, c: 1 -> 2"));
  CHECK_FALSE(star.is_gentle);
  REQUIRE_FALSE(star.violations.empty());
  CHECK(star.violations[0].condition == GentleCondition::DegreeBound);

  // b and c both continue a outside I
  auto const fork = validate_gentle(parse_quiver(
      "vertices: 1 2 3 4 ; arrows: a: 1 -> 2, b: 2 -> 3, c: 2 -> 4"));
  CHECK_FALSE(fork.is_gentle);
  CHECK(std::any_of(fork.violations.begin(), fork.violations.end(), [](auto const& v) {
    return v.condition == GentleCondition::ForwardContinuation && v.location == "arrow a";
  }));
}

TEST_CASE("report JSON round trip and condition codes") {
  auto const r = validate_gentle(parse_quiver(
      "vertices: 1 ; arrows: x: 1 -> 1, y: 1 -> 1 ; relations: x x, y y, x y, y x"));
  CHECK(report_from_json(to_json(r)) == r);
  for (auto c : {GentleCondition::DegreeBound, GentleCondition::ForwardContinuation,
                 GentleCondition::BackwardContinuation, GentleCondition::FiniteDimension}) {
    CHECK(condition_from_code(condition_code(c)) == c);
  }
}

namespace {
  // Relation-free paths die out before the length at which one must repeat
  // an arrow.
  bool finitely_many_paths(BoundQuiver const& q) {
    std::size_t const         bound = q.vertex_count() * q.arrow_count() + 1;
    std::vector<std::vector<ArrowIndex>> layer;
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      layer.push_back({a});
    }
    for (std::size_t len = 1; len <= bound && !layer.empty(); ++len) {
      std::vector<std::vector<ArrowIndex>> next;
      for (auto const& p : layer) {
        for (ArrowIndex b = 0; b < q.arrow_count(); ++b) {
          if (q.arrow(p.back()).target == q.arrow(b).source && !q.is_relation(p.back(), b)) {
            next.push_back(p);
            next.back().push_back(b);
          }
        }
      }
      layer = std::move(next);
    }
    return layer.empty();
  }
}  // namespace

TEST_CASE("finite dimension agrees with a path count") {
  for (auto const& q : testing::bound_quivers(2, 3)) {
    CAPTURE(to_text(q));
    CHECK(validate_gentle(q).is_finite_dimensional == finitely_many_paths(q));
  }
}

TEST_CASE("validation ignores input order") {
  std::mt19937 rng(7);
  for (auto const& q : testing::bound_quivers(3, 3)) {
    std::vector<std::size_t> vp(q.vertex_count()), ap(q.arrow_count());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ap.begin(), ap.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ap.begin(), ap.end(), rng);
    auto const p  = testing::relabel(q, vp, ap);
    auto const r1 = validate_gentle(q);
    auto const r2 = validate_gentle(p);
    CHECK(r1.is_gentle == r2.is_gentle);
    CHECK(r1.is_finite_dimensional == r2.is_finite_dimensional);
    CHECK(r1.violations.size() == r2.violations.size());
  }
}
