#include <doctest.h>

#include "corpus.hpp"
#include "gentlekit/bands.hpp"
#include "gentlekit/tau_decision.hpp"
#include "oracles.hpp"

using namespace gentlekit;

namespace {
  BoundQuiver const kronecker =
      parse_quiver("vertices: 1 2 ; arrows: a: 1 -> 2, b: 1 -> 2");
  BoundQuiver const a2   = parse_quiver("vertices: 1 2 ; arrows: a: 1 -> 2");
  BoundQuiver const loop = parse_quiver("vertices: 1 ; arrows: x: 1 -> 1 ; relations: x x");
  BoundQuiver const two_loops = parse_quiver(
      "vertices: 1 ; arrows: x: 1 -> 1, y: 1 -> 1 ; relations: x x, y y, x y, y x");
  BoundQuiver const two_cycles = parse_quiver(
      "vertices: 1 2 ; arrows: alpha: 1 -> 1, beta: 1 -> 2, gamma: 2 -> 2 ;"
      " relations: alpha alpha, gamma gamma");
  // Ã_2 with one arrow reversed
  BoundQuiver const triangle =
      parse_quiver("vertices: 1 2 3 ; arrows: a: 1 -> 2, b: 2 -> 3, c: 1 -> 3");

  StringWord w(BoundQuiver const& q, std::string_view text) { return parse_word(q, text); }
}  // namespace

TEST_CASE("is_band") {
  CHECK(is_band(two_loops, w(two_loops, "x y^-1")));
  CHECK(is_band(kronecker, w(kronecker, "a b^-1")));
  CHECK_FALSE(is_band(kronecker, w(kronecker, "a b^-1 a b^-1")));
  CHECK_FALSE(is_band(a2, w(a2, "a")));
  CHECK_FALSE(is_band(a2, StringWord::trivial(0)));
  // all direct: a cycle of the quiver, not a band
  auto const cyc = parse_quiver("vertices: 1 ; arrows: x: 1 -> 1");
  CHECK_FALSE(is_band(cyc, w(cyc, "x")));
}

TEST_CASE("primitivity") {
  auto const ab = w(kronecker, "a b^-1");
  auto const abab = w(kronecker, "a b^-1 a b^-1");
  CHECK(is_primitive(ab.letters()));
  CHECK_FALSE(is_primitive(abab.letters()));
}

TEST_CASE("has_band") {
  CHECK_FALSE(has_band(a2));
  CHECK(has_band(kronecker));
  CHECK_FALSE(has_band(loop));
  CHECK(LetterGraph(loop).successors(0).empty());
  CHECK(LetterGraph(loop).successors(1).empty());
  CHECK_THROWS_AS(has_band(two_loops), RefusedInput);
}

TEST_CASE("minimal bands") {
  REQUIRE(find_minimal_band(kronecker));
  CHECK(format_word(kronecker, *find_minimal_band(kronecker)) == "a b^-1");
  auto const b = find_minimal_band(two_cycles);
  REQUIRE(b);
  CHECK(b->length() == 4);
  CHECK(canonical_band(two_cycles, w(two_cycles, "alpha beta gamma beta^-1")) == *b);
  CHECK_FALSE(find_minimal_band(a2));
  auto const t = find_minimal_band(triangle);
  REQUIRE(t);
  CHECK(t->length() == 3);
  // no precondition on the raw search
  CHECK(search_minimal_band(two_loops, 4) == w(two_loops, "x y^-1"));
}

TEST_CASE("canonical_band picks the least rotation of either orientation") {
  auto const band = w(two_cycles, "gamma beta^-1 alpha beta");
  auto const c    = canonical_band(two_cycles, band);
  CHECK(is_band(two_cycles, c));
  for (std::size_t k = 0; k < band.length(); ++k) {
    CHECK_FALSE(word_less(two_cycles, rotate(two_cycles, band, k), c));
    CHECK_FALSE(word_less(two_cycles, rotate(two_cycles, inverse(two_cycles, band), k), c));
  }
}

TEST_CASE("reduce_band on the named examples") {
  auto const k = reduce_band(kronecker);
  CHECK(k.form == WitnessForm::SimpleCycle);
  CHECK(format_word(kronecker, k.band) == "a b^-1");
  CHECK_FALSE(witness_defect(kronecker, k));

  ReductionTrace trace;
  auto const     t = reduce_band(two_cycles, &trace);
  CHECK_FALSE(witness_defect(two_cycles, t));
  REQUIRE(t.form == WitnessForm::TwoCycles);
  CHECK(format_word(two_cycles, t.left_cycle) == "alpha");
  CHECK(format_word(two_cycles, t.connector) == "beta");
  CHECK(format_word(two_cycles, t.right_cycle) == "gamma");
  CHECK_FALSE(trace.steps.empty());
  CHECK_FALSE(trace.used_alternative);

  auto const tri = reduce_band(triangle);
  CHECK(tri.form == WitnessForm::SimpleCycle);
  CHECK(tri.band.length() == 3);

  CHECK_THROWS_AS(reduce_band(a2), std::invalid_argument);
}

TEST_CASE("witness classes") {
  auto const k = recognize_witness_class(kronecker, reduce_band(kronecker));
  CHECK(k.kind == WitnessClassKind::ATilde);
  CHECK(k.m == 1);

  auto const t = recognize_witness_class(two_cycles, reduce_band(two_cycles));
  CHECK(t.kind == WitnessClassKind::TwoCycle);
  CHECK(t.r == 1);
  CHECK(t.s == 1);
  CHECK(t.t == 1);
  CHECK_FALSE(t.needs_idempotent_reduction());

  auto const s0 = parse_quiver(
      "vertices: 1 2 3 ; arrows: a: 1 -> 1, g1: 1 -> 2, g2: 3 -> 2, g3: 3 -> 1 ;"
      " relations: a a, g3 g1");
  auto const c = recognize_witness_class(s0, reduce_band(s0));
  CHECK(c.kind == WitnessClassKind::TwoCycle);
  CHECK(c.s == 0);
  CHECK(c.needs_idempotent_reduction());

  CHECK(recognize_atilde(kronecker) == 1);
  CHECK(recognize_atilde(triangle) == 2);
  CHECK_FALSE(recognize_atilde(a2));
  CHECK_FALSE(recognize_atilde(parse_quiver("vertices: 1 ; arrows: x: 1 -> 1")));
}

TEST_CASE("witness_defect catches broken witnesses") {
  auto good = reduce_band(two_cycles);
  REQUIRE(good.form == WitnessForm::TwoCycles);
  auto bad = good;
  bad.band = rotate(two_cycles, bad.band, 1);
  CHECK(witness_defect(two_cycles, bad));

  CHECK_THROWS_AS(make_two_cycle_witness(two_cycles, w(two_cycles, "alpha"),
                                         w(two_cycles, "beta"), w(two_cycles, "alpha")),
                  QuiverError);
  auto simple = make_simple_witness(kronecker, w(kronecker, "a b^-1 a b^-1"));
  CHECK(witness_defect(kronecker, simple));
}

TEST_CASE("band detection agrees with the oracles on a small corpus") {
  for (auto const& q : testing::gentle_corpus(2, 4)) {
    CAPTURE(to_text(q));
    auto const bound  = minimal_band_bound(q);
    auto const brute  = testing::brute_force_band(q, bound);
    auto const search = find_minimal_band(q);
    CHECK(has_band(q) == brute.has_value());
    CHECK(search.has_value() == brute.has_value());
    if (search && brute) {
      CHECK(search->length() == brute->size());
      CHECK(testing::oracle_is_band(q, testing::encode(*search)));
      auto const witness = reduce_band(q);
      CHECK_FALSE(witness_defect(q, witness));
      CHECK_NOTHROW(recognize_witness_class(q, witness));
    }
  }
}

TEST_CASE("reduce_band is stable under relabeling") {
  for (auto const& q : testing::gentle_corpus(2, 4)) {
    if (!has_band(q)) {
      continue;
    }
    std::vector<std::size_t> vp(q.vertex_count()), ap(q.arrow_count());
    for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = i;
    for (std::size_t i = 0; i < ap.size(); ++i) ap[i] = i;
    // fresh names in the same relative order: identical output by index
    auto const p = testing::relabel(q, vp, ap);
    auto const a = reduce_band(q);
    auto const b = reduce_band(p);
    CHECK(a == b);
    CHECK(recognize_witness_class(q, a) == recognize_witness_class(p, b));
  }
}
