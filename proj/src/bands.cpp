#include "gentlekit/bands.hpp"

#include <algorithm>
#include <set>

namespace gentlekit {

  bool is_primitive(std::span<Letter const> letters) {
    std::size_t const n = letters.size();
    if (n == 0) {
      return false;
    }
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
      while (k > 0 && !(letters[i] == letters[k])) {
        k = border[k - 1];
      }
      if (letters[i] == letters[k]) {
        ++k;
      }
      border[i] = k;
    }
    std::size_t const period = n - border[n - 1];
    return period == n || n % period != 0;
  }

  bool is_band(BoundQuiver const& q, StringWord const& w) {
    if (w.is_trivial() || !is_string(q, w) || target(q, w) != source(q, w)) {
      return false;
    }
    if (junction_defect(q, w[w.length() - 1], w[0])) {
      return false;
    }
    bool direct = false, inverse = false;
    for (Letter l : w.letters()) {
      (l.is_direct() ? direct : inverse) = true;
    }
    return direct && inverse && is_primitive(w.letters());
  }

  StringWord rotate(BoundQuiver const& q, StringWord const& w,
                    std::size_t offset) {
    if (w.is_trivial()) {
      return w;
    }
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    std::rotate(letters.begin(),
                letters.begin() + static_cast<std::ptrdiff_t>(offset % letters.size()),
                letters.end());
    return StringWord::of(q, std::move(letters));
  }

  StringWord canonical_band(BoundQuiver const& q, StringWord const& w) {
    StringWord best = w;
    for (auto const& base : {w, inverse(q, w)}) {
      for (std::size_t k = 0; k < base.length(); ++k) {
        auto r = rotate(q, base, k);
        if (word_less(q, r, best)) {
          best = std::move(r);
        }
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // LetterGraph
  ////////////////////////////////////////////////////////////////////////

  LetterGraph::LetterGraph(BoundQuiver const& q)
      : successors_(2 * q.arrow_count()) {
    for (std::size_t node = 0; node < successors_.size(); ++node) {
      Letter const      l   = letter_of(node);
      VertexIndex const end = target(q, l);
      std::vector<Letter> next;
      for (ArrowIndex a : q.arrows_from(end)) {
        next.push_back({a, Direction::Direct});
      }
      for (ArrowIndex a : q.arrows_into(end)) {
        next.push_back({a, Direction::Inverse});
      }
      for (Letter m : next) {
        if (!junction_defect(q, l, m)) {
          successors_[node].push_back(node_of(m));
        }
      }
      std::sort(successors_[node].begin(), successors_[node].end());
    }
  }

  std::optional<std::vector<Letter>> LetterGraph::find_cycle() const {
    enum class Mark { Fresh, Active, Done };
    std::vector<Mark> mark(node_count(), Mark::Fresh);
    // iterative DFS: (node, next successor slot)
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < node_count(); ++root) {
      if (mark[root] != Mark::Fresh) {
        continue;
      }
      stack.emplace_back(root, 0);
      mark[root] = Mark::Active;
      while (!stack.empty()) {
        auto& [node, slot] = stack.back();
        if (slot == successors_[node].size()) {
          mark[node] = Mark::Done;
          stack.pop_back();
          continue;
        }
        std::size_t const next = successors_[node][slot++];
        if (mark[next] == Mark::Active) {
          std::vector<Letter> cycle;
          bool                on_cycle = false;
          for (auto const& frame : stack) {
            on_cycle = on_cycle || frame.first == next;
            if (on_cycle) {
              cycle.push_back(letter_of(frame.first));
            }
          }
          return cycle;
        }
        if (mark[next] == Mark::Fresh) {
          mark[next] = Mark::Active;
          stack.emplace_back(next, 0);
        }
      }
    }
    return std::nullopt;
  }

  bool has_band(BoundQuiver const& q) {
    require_gentle(q);
    // On a finite-dimensional algebra a cycle here cannot be all direct or
    // all inverse, so its primitive root is a band.
    return LetterGraph(q).find_cycle().has_value();
  }

  std::optional<StringWord> search_minimal_band(BoundQuiver const& q,
                                                std::size_t max_len) {
    auto layer = trivial_strings(q);
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
      layer = extend_layer(q, layer);
      // layers are sorted, so the first band is the least one
      for (auto const& w : layer) {
        if (is_band(q, w)) {
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::size_t minimal_band_bound(BoundQuiver const& q) noexcept {
    return 4 * q.vertex_count();
  }

  std::optional<StringWord> find_minimal_band(BoundQuiver const& q) {
    require_gentle(q);
    return search_minimal_band(q, minimal_band_bound(q));
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  Support support_of(BoundQuiver const& q, StringWord const& w) {
    Support s;
    s.vertices = vertex_walk(q, w);
    for (Letter l : w.letters()) {
      s.arrows.push_back(l.arrow);
    }
    for (auto* v : {&s.vertices, &s.arrows}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return s;
  }

  WitnessBand make_simple_witness(BoundQuiver const& q, StringWord band) {
    WitnessBand w;
    w.form    = WitnessForm::SimpleCycle;
    w.support = support_of(q, band);
    w.band    = std::move(band);
    return w;
  }

  WitnessBand make_two_cycle_witness(BoundQuiver const& q,
                                     StringWord         left,
                                     StringWord         connector,
                                     StringWord         right) {
    auto joined = concat(q, left, connector);
    if (joined) {
      joined = concat(q, *joined.word, right);
    }
    if (joined) {
      joined = concat(q, *joined.word, inverse(q, connector));
    }
    if (!joined) {
      throw QuiverError("witness pieces do not form a string: "
                        + std::string(describe(*joined.defect)));
    }
    WitnessBand w;
    w.form        = WitnessForm::TwoCycles;
    w.band        = std::move(*joined.word);
    w.support     = support_of(q, w.band);
    w.left_cycle  = std::move(left);
    w.connector   = std::move(connector);
    w.right_cycle = std::move(right);
    return w;
  }

  namespace {
    // Positions 0..n-1 of a closed walk (or 0..n of an open one) distinct.
    bool repeat_free(std::vector<VertexIndex> walk, bool closed) {
      if (closed && !walk.empty()) {
        walk.pop_back();
      }
      std::sort(walk.begin(), walk.end());
      return std::adjacent_find(walk.begin(), walk.end()) == walk.end();
    }

    std::set<VertexIndex> vertex_set(BoundQuiver const& q, StringWord const& w) {
      auto walk = vertex_walk(q, w);
      return {walk.begin(), walk.end()};
    }

    std::set<VertexIndex> intersection(std::set<VertexIndex> const& a,
                                       std::set<VertexIndex> const& b) {
      std::set<VertexIndex> out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(out, out.begin()));
      return out;
    }

    bool closed(BoundQuiver const& q, StringWord const& w) {
      return !w.is_trivial() && source(q, w) == target(q, w);
    }

    bool square_is_string(BoundQuiver const& q, StringWord const& w) {
      return !junction_defect(q, w[w.length() - 1], w[0]);
    }
  }  // namespace

  std::optional<std::string> witness_defect(BoundQuiver const& q,
                                            WitnessBand const& w) {
    if (!is_band(q, w.band)) {
      return "reassembled word is not a band";
    }
    if (!(w.support == support_of(q, w.band))) {
      return "support does not match the band";
    }
    if (w.form == WitnessForm::SimpleCycle) {
      if (!repeat_free(vertex_walk(q, w.band), true)) {
        return "band repeats a vertex";
      }
      return std::nullopt;
    }
    auto const& left  = w.left_cycle;
    auto const& omega = w.connector;
    auto const& right = w.right_cycle;
    for (auto const* piece : {&left, &omega, &right}) {
      if (!is_string(q, *piece)) {
        return "a piece is not a string";
      }
    }
    if (!closed(q, left) || !closed(q, right)) {
      return "b' and b'' must be closed non-trivial strings";
    }
    if (source(q, omega) != source(q, left)
        || target(q, omega) != source(q, right)) {
      return "ω does not join the two cycles";
    }
    std::vector<Letter> word(left.letters().begin(), left.letters().end());
    auto const          back = inverse(q, omega);
    for (auto const* p : {&omega, &right, &back}) {
      word.insert(word.end(), p->letters().begin(), p->letters().end());
    }
    if (!(StringWord::of(q, std::move(word)) == w.band)) {
      return "band is not b' ω b'' ω^-1";
    }
    if (square_is_string(q, left) || square_is_string(q, right)) {
      return "the square of b' or b'' is a string";
    }
    if (!repeat_free(vertex_walk(q, left), true)
        || !repeat_free(vertex_walk(q, right), true)
        || !repeat_free(vertex_walk(q, omega), false)) {
      return "a piece repeats a vertex";
    }
    auto const vl = vertex_set(q, left);
    auto const vo = vertex_set(q, omega);
    auto const vr = vertex_set(q, right);
    VertexIndex const x = source(q, omega), y = target(q, omega);
    if (intersection(vl, vo) != std::set<VertexIndex>{x}
        || intersection(vr, vo) != std::set<VertexIndex>{y}) {
      return "ω meets a cycle away from its end points";
    }
    auto const lr = intersection(vl, vr);
    if (omega.is_trivial() ? lr != std::set<VertexIndex>{x} : !lr.empty()) {
      return "b' and b'' share a vertex other than the common end point";
    }
    return std::nullopt;
  }

  namespace {
    StringWord piece(BoundQuiver const& q, StringWord const& w,
                     std::size_t begin, std::size_t end) {
      return substring(q, w, begin, end);
    }

    WitnessBand checked(BoundQuiver const& q, WitnessBand w, char const* step) {
      if (auto d = witness_defect(q, w)) {
        throw ReductionFailure(std::string(step) + ": " + *d);
      }
      return w;
    }

    std::optional<WitnessBand> try_witness(BoundQuiver const& q,
                                           auto&&             build) {
      try {
        auto w = build();
        if (!witness_defect(q, w)) {
          return w;
        }
      } catch (QuiverError const&) {
      }
      return std::nullopt;
    }
  }  // namespace

  WitnessBand reduce_band(BoundQuiver const& q, ReductionTrace* trace) {
    auto note = [trace](std::string step) {
      if (trace) {
        trace->steps.push_back(std::move(step));
      }
    };
    auto const minimal = find_minimal_band(q);
    if (!minimal) {
      throw std::invalid_argument("bound quiver has no band");
    }
    StringWord const& b = *minimal;
    std::size_t const n = b.length();
    note("minimal band " + format_word(q, b));

    // (i) no repeated vertex
    if (repeat_free(vertex_walk(q, b), true)) {
      note("no repeated vertex: simple cycle");
      return checked(q, make_simple_witness(q, b), "simple minimal band");
    }

    // (ii) rotate to a repeated vertex u; b' is the first return to u
    std::optional<StringWord> rotated;
    std::size_t               split = 0;
    for (std::size_t offset = 0; offset < n && !rotated; ++offset) {
      auto       rb   = rotate(q, b, offset);
      auto const walk = vertex_walk(q, rb);
      auto const ret  = std::find(walk.begin() + 1, walk.end() - 1, walk[0]);
      if (ret == walk.end() - 1) {
        continue;
      }
      std::size_t const k = static_cast<std::size_t>(ret - walk.begin());
      if (repeat_free({walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(k) + 1}, true)) {
        rotated = std::move(rb);
        split   = k;
      }
    }
    if (!rotated) {
      throw ReductionFailure("no rotation splits off a repeat-free b'");
    }
    auto const left  = piece(q, *rotated, 0, split);
    auto const tail  = piece(q, *rotated, split, n);
    VertexIndex const u = source(q, left);
    note("split at " + q.vertex_id(u) + ": b' = " + format_word(q, left)
         + ", b'' = " + format_word(q, tail));

    {
      auto const walk = vertex_walk(q, left);
      std::set<VertexIndex> interior(walk.begin() + 1, walk.end() - 1);
      if (!intersection(interior, vertex_set(q, tail)).empty()) {
        throw ReductionFailure("b' and b'' share a vertex besides u");
      }
    }
    if (square_is_string(q, left) || square_is_string(q, tail)) {
      throw ReductionFailure("minimality violated: (b')^2 or (b'')^2 is a string");
    }

    // (iii) b'' repeat-free: ω trivial
    auto const tail_walk = vertex_walk(q, tail);
    if (repeat_free(tail_walk, true)) {
      note("b'' repeat-free: trivial connector");
      return checked(
          q,
          make_two_cycle_witness(q, left, StringWord::trivial(u), tail),
          "b' b'' with trivial ω");
    }

    // (iv) b''' = β_j..β_k closed at a repeated vertex v, ω = β_1..β_{j-1}.
    // Candidates in order of first repetition; the earliest one always has
    // repeat-free ω and b'''.
    std::size_t const m = tail.length();
    for (std::size_t k = 1; k <= m; ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        if (tail_walk[i] != tail_walk[k] || (i == 0 && k == m)) {
          continue;
        }
        std::vector<VertexIndex> prefix(tail_walk.begin(),
                                        tail_walk.begin() + static_cast<std::ptrdiff_t>(k));
        if (!repeat_free(prefix, false)) {
          continue;
        }
        auto const omega = piece(q, tail, 0, i);
        auto const cycle = piece(q, tail, i, k);
        Letter const before = i > 0 ? tail[i - 1] : left[left.length() - 1];
        bool const relation
            = junction_defect(q, cycle[cycle.length() - 1], before.inverse())
              == StringDefect::HitsRelation;
        auto simple = [&] { return make_simple_witness(q, cycle); };
        auto two    = [&] { return make_two_cycle_witness(q, left, omega, cycle); };
        note("b''' = " + format_word(q, cycle) + ", connector "
             + format_word(q, omega)
             + (relation ? ": junction relation, simple cycle"
                         : ": no junction relation, two cycles"));
        auto first  = relation ? try_witness(q, simple) : try_witness(q, two);
        if (first) {
          return *first;
        }
        if (auto second = relation ? try_witness(q, two) : try_witness(q, simple)) {
          note("preferred form failed; using the other form");
          if (trace) {
            trace->used_alternative = true;
          }
          return *second;
        }
      }
    }
    throw ReductionFailure("no closed sub-walk of b'' yields a witness");
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The relation closing a cycle whose square is not a string.
    Relation closing_relation(BoundQuiver const& q, StringWord const& cycle) {
      Letter const last = cycle[cycle.length() - 1], first = cycle[0];
      if (junction_defect(q, last, first) != StringDefect::HitsRelation) {
        throw WitnessClassError("cycle is not closed off by a relation");
      }
      return last.is_direct() ? Relation{last.arrow, first.arrow}
                              : Relation{first.arrow, last.arrow};
    }

    std::set<Relation> relations_within(BoundQuiver const&             q,
                                        std::vector<ArrowIndex> const& arrows) {
      std::set<Relation> out;
      for (auto const& r : q.relations()) {
        if (std::binary_search(arrows.begin(), arrows.end(), r.first)
            && std::binary_search(arrows.begin(), arrows.end(), r.second)) {
          out.insert(r);
        }
      }
      return out;
    }
  }  // namespace

  WitnessClass recognize_witness_class(BoundQuiver const& q,
                                       WitnessBand const& w) {
    if (auto d = witness_defect(q, w)) {
      throw WitnessClassError("invalid witness: " + *d);
    }
    auto const relations = relations_within(q, w.support.arrows);
    WitnessClass c;
    if (w.form == WitnessForm::SimpleCycle) {
      std::size_t const n = w.band.length();
      if (n < 2 || w.support.vertices.size() != n || w.support.arrows.size() != n) {
        throw WitnessClassError("support is not a cycle");
      }
      if (!relations.empty()) {
        throw WitnessClassError("support of a simple band carries relations");
      }
      c.kind = WitnessClassKind::ATilde;
      c.m    = n - 1;
      return c;
    }
    c.kind = WitnessClassKind::TwoCycle;
    c.r    = w.left_cycle.length();
    c.s    = w.connector.length();
    c.t    = w.right_cycle.length();
    if (w.support.arrows.size() != c.r + c.s + c.t
        || w.support.vertices.size() + 1 != c.r + c.s + c.t) {
      throw WitnessClassError("support is not two cycles joined by a path");
    }
    std::set<Relation> const expected{closing_relation(q, w.left_cycle),
                                      closing_relation(q, w.right_cycle)};
    if (relations != expected) {
      throw WitnessClassError(
          "support relations are not exactly the two junction relations");
    }
    return c;
  }

  std::optional<std::size_t> recognize_atilde(BoundQuiver const& q) {
    std::size_t const n = q.vertex_count();
    if (n < 2 || q.arrow_count() != n || !q.relations().empty()) {
      return std::nullopt;
    }
    bool oriented = true;
    for (VertexIndex v = 0; v < n; ++v) {
      if (q.arrows_from(v).size() + q.arrows_into(v).size() != 2) {
        return std::nullopt;
      }
      oriented = oriented && q.arrows_into(v).size() == 1;
    }
    // connected
    std::vector<bool>        seen(n, false);
    std::vector<VertexIndex> todo{0};
    seen[0]             = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      VertexIndex const v = todo.back();
      todo.pop_back();
      for (auto const& a : q.arrows()) {
        for (auto [from, to] : {std::pair{a.source, a.target},
                                std::pair{a.target, a.source}}) {
          if (from == v && !seen[to]) {
            seen[to] = true;
            ++reached;
            todo.push_back(to);
          }
        }
      }
    }
    if (reached != n || oriented) {
      return std::nullopt;
    }
    return n - 1;
  }

}  // namespace gentlekit
