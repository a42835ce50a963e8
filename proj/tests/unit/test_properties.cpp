#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "gentlekit/string_modules.hpp"
#include "gentlekit/tau_decision.hpp"
#include "oracles.hpp"

using namespace gentlekit;

namespace {
  bool infinite(BoundQuiver const& q) { return decide(q).verdict == Verdict::TauInfinite; }
}  // namespace

TEST_CASE("deleting a vertex or an arrow never creates a band") {
  for (auto const& q : testing::gentle_corpus(3, 3)) {
    CAPTURE(to_text(q));
    bool const original = infinite(q);
    for (auto const& a : q.arrows()) {
      if (infinite(quotient_by_ideal(q, {}, {a.id}))) {
        CHECK(original);
      }
    }
    for (auto const& v : q.vertices()) {
      if (infinite(quotient_by_ideal(q, {v}, {}))) {
        CHECK(original);
      }
    }
  }
}

TEST_CASE("idempotent reductions never create a band") {
  for (auto const& q : testing::gentle_corpus(3, 3)) {
    CAPTURE(to_text(q));
    bool const original = infinite(q);
    for (auto const& v : q.vertices()) {
      auto const r = idempotent_reduction(q, v);
      if (r.gentle() && infinite(r.quiver)) {
        CHECK(original);
      }
    }
  }
}

TEST_CASE("brick families grow and stay bricks") {
  for (auto const& q : testing::gentle_corpus(2, 4)) {
    if (!has_band(q)) {
      continue;
    }
    auto const w = reduce_band(q);
    if (w.form != WitnessForm::TwoCycles || w.connector.is_trivial()) {
      continue;
    }
    CAPTURE(to_text(q));
    auto const family = brick_family(q, w, 3);
    std::set<std::string> seen;
    for (std::size_t k = 0; k < family.size(); ++k) {
      CHECK(family[k].length() == (k + 1) * family[0].length());
      CHECK(is_brick(q, family[k]));
      seen.insert(format_word(q, canonical(q, family[k])));
    }
    CHECK(seen.size() == family.size());
  }
}

TEST_CASE("string validity is symmetric under inversion") {
  auto const q = parse_quiver(
      "vertices: 1 2 ; arrows: a: 1 -> 1, b: 1 -> 2, c: 2 -> 2, d: 2 -> 1 ;"
      " relations: a a, c c, b d, d b");
  std::mt19937                       rng(99);
  std::uniform_int_distribution<int> letter(0, 7), length(1, 6);
  std::size_t                        strings = 0;
  for (int i = 0; i < 2000; ++i) {
    testing::Code c(static_cast<std::size_t>(length(rng)));
    for (auto& l : c) {
      l = letter(rng);
    }
    auto const s = testing::decode(q, c);
    bool const ok = is_string(q, s);
    CHECK(ok == testing::oracle_is_string(q, c));
    CHECK(ok == is_string(q, inverse(q, s)));
    strings += ok;
  }
  CHECK(strings > 0);
}

TEST_CASE("Hom over two prime fields and the rationals on longer strings") {
  auto const q = parse_quiver(
      "vertices: 1 2 3 ; arrows: a: 1 -> 2, b: 1 -> 2, c: 2 -> 3, d: 3 -> 3 ;"
      " relations: a c, d d");
  auto const strings = enumerate_strings(q, 6);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, strings.size() - 1);
  for (int i = 0; i < 200; ++i) {
    auto const& c = strings[pick(rng)];
    auto const& d = strings[pick(rng)];
    auto const  h = hom_dim_combinatorial(q, c, d).count;
    CHECK(h == hom_dim_linear(q, c, d, FieldSpec::rationals()));
    CHECK(h == hom_dim_linear(q, c, d, FieldSpec::prime(2)));
    CHECK(h == hom_dim_linear(q, c, d, FieldSpec::prime(32003)));
  }
}
