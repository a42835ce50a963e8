#include "gentlekit/walks.hpp"

#include <algorithm>
#include <sstream>

namespace gentlekit {

  VertexIndex source(BoundQuiver const& q, Letter l) {
    auto const& a = q.arrow(l.arrow);
    return l.is_direct() ? a.source : a.target;
  }

  VertexIndex target(BoundQuiver const& q, Letter l) {
    auto const& a = q.arrow(l.arrow);
    return l.is_direct() ? a.target : a.source;
  }

  std::size_t letter_key(BoundQuiver const& q, Letter l) {
    return 2 * q.arrow_rank(l.arrow) + (l.is_direct() ? 0 : 1);
  }

  StringWord StringWord::of(BoundQuiver const& q, std::vector<Letter> letters) {
    if (letters.empty()) {
      throw QuiverError("a non-trivial word needs at least one letter");
    }
    StringWord w;
    w.start_   = source(q, letters.front());
    w.letters_ = std::move(letters);
    return w;
  }

  VertexIndex source(BoundQuiver const& q, StringWord const& w) {
    return w.is_trivial() ? w.start() : source(q, w[0]);
  }

  VertexIndex target(BoundQuiver const& q, StringWord const& w) {
    return w.is_trivial() ? w.start() : target(q, w[w.length() - 1]);
  }

  std::vector<VertexIndex> vertex_walk(BoundQuiver const& q,
                                       StringWord const&  w) {
    std::vector<VertexIndex> walk{source(q, w)};
    for (Letter l : w.letters()) {
      walk.push_back(target(q, l));
    }
    return walk;
  }

  std::string_view describe(StringDefect d) noexcept {
    switch (d) {
      case StringDefect::NotComposable: return "not composable";
      case StringDefect::NotReduced: return "not reduced";
      case StringDefect::HitsRelation: return "contains a relation";
    }
    return "?";
  }

  std::optional<StringDefect>
  junction_defect(BoundQuiver const& q, Letter left, Letter right) {
    if (target(q, left) != source(q, right)) {
      return StringDefect::NotComposable;
    }
    if (right == left.inverse()) {
      return StringDefect::NotReduced;
    }
    if (left.direction == right.direction) {
      bool const rel = left.is_direct() ? q.is_relation(left.arrow, right.arrow)
                                        : q.is_relation(right.arrow, left.arrow);
      if (rel) {
        return StringDefect::HitsRelation;
      }
    }
    return std::nullopt;
  }

  std::optional<DefectSite> string_defect(BoundQuiver const& q,
                                          StringWord const&  w) {
    if (w.is_trivial()) {
      if (w.start() >= q.vertex_count()) {
        throw QuiverError("unknown vertex in trivial word");
      }
      return std::nullopt;
    }
    for (Letter l : w.letters()) {
      if (l.arrow >= q.arrow_count()) {
        throw QuiverError("unknown arrow in word");
      }
    }
    if (w.start() != source(q, w[0])) {
      return DefectSite{StringDefect::NotComposable, 0};
    }
    for (std::size_t i = 0; i + 1 < w.length(); ++i) {
      if (auto d = junction_defect(q, w[i], w[i + 1])) {
        return DefectSite{*d, i};
      }
    }
    return std::nullopt;
  }

  bool is_string(BoundQuiver const& q, StringWord const& w) {
    return !string_defect(q, w).has_value();
  }

  StringWord inverse(BoundQuiver const& q, StringWord const& w) {
    if (w.is_trivial()) {
      return w;
    }
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    return StringWord::of(q, std::move(letters));
  }

  ConcatResult concat(BoundQuiver const& q, StringWord const& u,
                      StringWord const& v) {
    if (target(q, u) != source(q, v)) {
      throw QuiverError("cannot concatenate: endpoints do not match");
    }
    if (u.is_trivial()) {
      return {v, std::nullopt};
    }
    if (v.is_trivial()) {
      return {u, std::nullopt};
    }
    if (auto d = junction_defect(q, u[u.length() - 1], v[0])) {
      return {std::nullopt, d};
    }
    std::vector<Letter> letters(u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return {StringWord::of(q, std::move(letters)), std::nullopt};
  }

  StringWord substring(BoundQuiver const& q,
                       StringWord const&  w,
                       std::size_t        begin,
                       std::size_t        end) {
    if (begin > end || end > w.length()) {
      throw std::out_of_range("substring interval outside the word");
    }
    if (begin == end) {
      return StringWord::trivial(begin == 0 ? source(q, w)
                                            : target(q, w[begin - 1]));
    }
    return StringWord::of(
        q, std::vector<Letter>(w.letters().begin() + begin,
                               w.letters().begin() + end));
  }

  bool word_less(BoundQuiver const& q, StringWord const& a,
                 StringWord const& b) {
    if (a.is_trivial() || b.is_trivial()) {
      if (a.is_trivial() && b.is_trivial()) {
        return q.vertex_rank(a.start()) < q.vertex_rank(b.start());
      }
      return a.is_trivial();
    }
    return std::lexicographical_compare(
        a.letters().begin(),
        a.letters().end(),
        b.letters().begin(),
        b.letters().end(),
        [&q](Letter x, Letter y) { return letter_key(q, x) < letter_key(q, y); });
  }

  StringWord canonical(BoundQuiver const& q, StringWord const& w) {
    auto inv = inverse(q, w);
    return word_less(q, inv, w) ? inv : w;
  }

  bool is_top(StringWord const& w, std::size_t begin, std::size_t end) {
    // letters are 1-based in the usual notation: letter i is w[i - 1]
    return (begin == 0 || !w[begin - 1].is_direct())
           && (end == w.length() || w[end].is_direct());
  }

  bool is_bottom(StringWord const& w, std::size_t begin, std::size_t end) {
    return (begin == 0 || w[begin - 1].is_direct())
           && (end == w.length() || !w[end].is_direct());
  }

  std::vector<Factorization> factorizations(StringWord const& w,
                                            FactorKind        kind) {
    std::vector<Factorization> out;
    auto const test = kind == FactorKind::Top ? is_top : is_bottom;
    for (std::size_t i = 0; i <= w.length(); ++i) {
      for (std::size_t j = i; j <= w.length(); ++j) {
        if (test(w, i, j)) {
          out.push_back({i, j, kind});
        }
      }
    }
    return out;
  }

  std::vector<StringWord> trivial_strings(BoundQuiver const& q) {
    std::vector<StringWord> out;
    for (VertexIndex v : q.vertices_in_canonical_order()) {
      out.push_back(StringWord::trivial(v));
    }
    return out;
  }

  std::vector<StringWord> extend_layer(BoundQuiver const&             q,
                                       std::vector<StringWord> const& layer) {
    std::vector<StringWord> out;
    for (auto const& w : layer) {
      VertexIndex const end = target(q, w);
      // Candidate letters in key order, so each layer stays sorted.
      std::vector<Letter> next;
      for (ArrowIndex a : q.arrows_from(end)) {
        next.push_back({a, Direction::Direct});
      }
      for (ArrowIndex a : q.arrows_into(end)) {
        next.push_back({a, Direction::Inverse});
      }
      std::sort(next.begin(), next.end(), [&q](Letter x, Letter y) {
        return letter_key(q, x) < letter_key(q, y);
      });
      for (Letter l : next) {
        if (!w.is_trivial() && junction_defect(q, w[w.length() - 1], l)) {
          continue;
        }
        std::vector<Letter> letters(w.letters().begin(), w.letters().end());
        letters.push_back(l);
        out.push_back(StringWord::of(q, std::move(letters)));
      }
    }
    // Extending trivial words yields every letter once per start vertex;
    // re-sort so the layer is in word order regardless of vertex order.
    if (!layer.empty() && layer.front().is_trivial()) {
      std::sort(out.begin(), out.end(), [&q](auto const& a, auto const& b) {
        return word_less(q, a, b);
      });
    }
    return out;
  }

  std::vector<std::vector<StringWord>> string_layers(BoundQuiver const& q,
                                                     std::size_t max_len) {
    std::vector<std::vector<StringWord>> layers{trivial_strings(q)};
    while (layers.size() <= max_len && !layers.back().empty()) {
      layers.push_back(extend_layer(q, layers.back()));
    }
    while (layers.size() <= max_len) {
      layers.emplace_back();
    }
    return layers;
  }

  std::vector<StringWord> enumerate_strings(BoundQuiver const& q,
                                            std::size_t        max_len) {
    require_gentle(q);
    std::vector<StringWord> out;
    for (auto const& layer : string_layers(q, max_len)) {
      for (auto const& w : layer) {
        if (canonical(q, w) == w) {
          out.push_back(w);
        }
      }
    }
    return out;
  }

  std::string format_word(BoundQuiver const& q, StringWord const& w) {
    if (w.is_trivial()) {
      return "e(" + q.vertex_id(w.start()) + ")";
    }
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += q.arrow(w[i].arrow).id;
      if (!w[i].is_direct()) {
        out += "^-1";
      }
    }
    return out;
  }

  StringWord parse_word(BoundQuiver const& q, std::string_view text) {
    std::istringstream  in{std::string(text)};
    std::string         token;
    std::vector<Letter> letters;
    std::optional<StringWord> trivial;
    while (in >> token) {
      if (token.size() > 3 && token.starts_with("e(") && token.ends_with(")")) {
        if (trivial || !letters.empty()) {
          throw QuiverError("a trivial word must stand alone: '"
                            + std::string(text) + "'");
        }
        trivial = StringWord::trivial(
            q.vertex_index(token.substr(2, token.size() - 3)));
        continue;
      }
      if (trivial) {
        throw QuiverError("a trivial word must stand alone: '"
                          + std::string(text) + "'");
      }
      Direction dir = Direction::Direct;
      if (token.ends_with("^-1")) {
        dir = Direction::Inverse;
        token.resize(token.size() - 3);
      }
      letters.push_back({q.arrow_index(token), dir});
    }
    if (trivial) {
      return *trivial;
    }
    if (letters.empty()) {
      throw QuiverError("empty word");
    }
    return StringWord::of(q, std::move(letters));
  }

}  // namespace gentlekit
