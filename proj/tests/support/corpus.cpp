#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace gentlekit::testing {

  namespace {

    using Edge = std::pair<std::size_t, std::size_t>;

    struct Shape {
      std::size_t              n = 0;
      std::vector<Edge>        arrows;
      std::vector<Edge>        relations;  // arrow index pairs
    };

    using Code = std::pair<std::vector<Edge>, std::vector<Edge>>;

    // Least encoding over all vertex and arrow permutations.
    Code canonical_code(Shape const& s) {
      std::vector<std::size_t> vp(s.n), ap(s.arrows.size());
      std::iota(vp.begin(), vp.end(), 0);
      std::optional<Code> best;
      do {
        std::iota(ap.begin(), ap.end(), 0);
        do {
          Code code;
          code.first.resize(s.arrows.size());
          for (std::size_t j = 0; j < s.arrows.size(); ++j) {
            code.first[ap[j]] = {vp[s.arrows[j].first], vp[s.arrows[j].second]};
          }
          if (!std::is_sorted(code.first.begin(), code.first.end())) {
            continue;
          }
          for (auto const& [x, y] : s.relations) {
            code.second.emplace_back(ap[x], ap[y]);
          }
          std::sort(code.second.begin(), code.second.end());
          if (!best || code < *best) {
            best = std::move(code);
          }
        } while (std::next_permutation(ap.begin(), ap.end()));
      } while (std::next_permutation(vp.begin(), vp.end()));
      return *best;
    }

    BoundQuiver build(Shape const& s) {
      static constexpr std::array<char const*, 8> names{"a", "b", "c", "d",
                                                        "e", "f", "g", "h"};
      std::vector<std::string> vertices;
      for (std::size_t v = 0; v < s.n; ++v) {
        vertices.push_back(std::to_string(v + 1));
      }
      std::vector<ArrowSpec> arrows;
      for (std::size_t j = 0; j < s.arrows.size(); ++j) {
        arrows.push_back({names.at(j), vertices[s.arrows[j].first],
                          vertices[s.arrows[j].second]});
      }
      std::vector<std::pair<std::string, std::string>> relations;
      for (auto const& [x, y] : s.relations) {
        relations.emplace_back(names.at(x), names.at(y));
      }
      return BoundQuiver(std::move(vertices), arrows, relations);
    }

    bool degrees_ok(Shape const& s) {
      std::vector<int> out(s.n, 0), in(s.n, 0);
      for (auto const& [src, tgt] : s.arrows) {
        if (++out[src] > 2 || ++in[tgt] > 2) {
          return false;
        }
      }
      return true;
    }

    struct Generator {
      std::size_t              max_arrows;
      bool                     filter;
      bool                     all_labellings;
      CorpusStats&             stats;
      std::set<Code>           seen;
      std::vector<BoundQuiver> out;

      void relations(Shape& s, std::vector<Edge> const& composable, std::size_t next,
                     std::vector<bool>& used_first, std::vector<bool>& used_second) {
        if (next == composable.size()) {
          ++stats.candidates;
          auto q = build(s);
          if (!filter) {
            out.push_back(std::move(q));
            return;
          }
          if (!validate_gentle(q).accepted()) {
            return;
          }
          ++stats.accepted;
          if (seen.insert(canonical_code(s)).second) {
            ++stats.non_isomorphic;
            if (!all_labellings) {
              out.push_back(std::move(q));
            }
          }
          if (all_labellings) {
            out.push_back(std::move(q));
          }
          return;
        }
        relations(s, composable, next + 1, used_first, used_second);
        auto const [x, y] = composable[next];
        if (!used_first[x] && !used_second[y]) {
          used_first[x] = used_second[y] = true;
          s.relations.push_back({x, y});
          relations(s, composable, next + 1, used_first, used_second);
          s.relations.pop_back();
          used_first[x] = used_second[y] = false;
        }
      }

      void arrows(Shape& s, std::size_t min_pair) {
        if (!degrees_ok(s)) {
          return;  // adding arrows cannot repair a degree violation
        }
        std::vector<Edge> composable;
        for (std::size_t x = 0; x < s.arrows.size(); ++x) {
          for (std::size_t y = 0; y < s.arrows.size(); ++y) {
            if (s.arrows[x].second == s.arrows[y].first) {
              composable.emplace_back(x, y);
            }
          }
        }
        std::vector<bool> first(s.arrows.size()), second(s.arrows.size());
        relations(s, composable, 0, first, second);
        if (s.arrows.size() == max_arrows) {
          return;
        }
        for (std::size_t p = min_pair; p < s.n * s.n; ++p) {
          s.arrows.emplace_back(p / s.n, p % s.n);
          arrows(s, p);
          s.arrows.pop_back();
        }
      }
    };

  }  // namespace

  std::vector<BoundQuiver> gentle_corpus(std::size_t  max_vertices,
                                         std::size_t  max_arrows,
                                         CorpusStats* stats,
                                         bool         all_labellings) {
    CorpusStats local;
    Generator   gen{max_arrows, true, all_labellings, stats ? *stats : local, {}, {}};
    for (std::size_t n = 1; n <= max_vertices; ++n) {
      Shape s;
      s.n = n;
      gen.arrows(s, 0);
    }
    return std::move(gen.out);
  }

  std::vector<BoundQuiver> bound_quivers(std::size_t max_vertices,
                                         std::size_t max_arrows) {
    CorpusStats stats;
    Generator   gen{max_arrows, false, false, stats, {}, {}};
    for (std::size_t n = 1; n <= max_vertices; ++n) {
      Shape s;
      s.n = n;
      gen.arrows(s, 0);
    }
    return std::move(gen.out);
  }

  BoundQuiver opposite(BoundQuiver const& q) {
    std::vector<std::string> vertices(q.vertices().begin(), q.vertices().end());
    std::vector<ArrowSpec>   arrows;
    for (auto const& a : q.arrows()) {
      arrows.push_back({a.id, q.vertex_id(a.target), q.vertex_id(a.source)});
    }
    std::vector<std::pair<std::string, std::string>> relations;
    for (auto const& r : q.relations()) {
      relations.emplace_back(q.arrow(r.second).id, q.arrow(r.first).id);
    }
    return BoundQuiver(std::move(vertices), arrows, relations);
  }

  BoundQuiver relabel(BoundQuiver const&              q,
                      std::vector<std::size_t> const& vertex_perm,
                      std::vector<std::size_t> const& arrow_perm) {
    auto vname = [&](VertexIndex v) { return "v" + std::to_string(vertex_perm[v]); };
    auto aname = [&](ArrowIndex a) { return "x" + std::to_string(arrow_perm[a]); };
    std::vector<std::string> vertices(q.vertex_count());
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      vertices[vertex_perm[v]] = vname(v);
    }
    std::vector<ArrowSpec> arrows(q.arrow_count());
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      arrows[arrow_perm[a]] = {aname(a), vname(q.arrow(a).source),
                               vname(q.arrow(a).target)};
    }
    std::vector<std::pair<std::string, std::string>> relations;
    for (auto const& r : q.relations()) {
      relations.emplace_back(aname(r.first), aname(r.second));
    }
    std::reverse(relations.begin(), relations.end());
    return BoundQuiver(std::move(vertices), arrows, relations);
  }

}  // namespace gentlekit::testing
