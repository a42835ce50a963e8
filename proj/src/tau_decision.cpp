#include "gentlekit/tau_decision.hpp"

#include <algorithm>
#include <set>

#include "gentlekit/string_modules.hpp"

namespace gentlekit {

  BoundQuiver quotient_by_ideal(BoundQuiver const&              q,
                                std::vector<std::string> const& kill_vertices,
                                std::vector<std::string> const& kill_arrows) {
    std::vector<bool> dead_vertex(q.vertex_count(), false);
    std::vector<bool> dead_arrow(q.arrow_count(), false);
    for (auto const& id : kill_vertices) {
      dead_vertex[q.vertex_index(id)] = true;
    }
    for (auto const& id : kill_arrows) {
      dead_arrow[q.arrow_index(id)] = true;
    }
    std::vector<std::string> vertices;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      if (!dead_vertex[v]) {
        vertices.push_back(q.vertex_id(v));
      }
    }
    std::vector<ArrowSpec> arrows;
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      auto const& arrow = q.arrow(a);
      dead_arrow[a] = dead_arrow[a] || dead_vertex[arrow.source]
                      || dead_vertex[arrow.target];
      if (!dead_arrow[a]) {
        arrows.push_back({arrow.id, q.vertex_id(arrow.source),
                          q.vertex_id(arrow.target)});
      }
    }
    std::vector<std::pair<std::string, std::string>> relations;
    for (auto const& r : q.relations()) {
      if (!dead_arrow[r.first] && !dead_arrow[r.second]) {
        relations.emplace_back(q.arrow(r.first).id, q.arrow(r.second).id);
      }
    }
    return BoundQuiver(std::move(vertices), arrows, relations);
  }

  BoundQuiver restrict_to(BoundQuiver const& q, Support const& keep) {
    std::vector<std::string> kill_vertices, kill_arrows;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      if (!std::binary_search(keep.vertices.begin(), keep.vertices.end(), v)) {
        kill_vertices.push_back(q.vertex_id(v));
      }
    }
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      if (!std::binary_search(keep.arrows.begin(), keep.arrows.end(), a)) {
        kill_arrows.push_back(q.arrow(a).id);
      }
    }
    return quotient_by_ideal(q, kill_vertices, kill_arrows);
  }

  IdempotentReduction idempotent_reduction(BoundQuiver const& q,
                                           std::string const& vertex) {
    VertexIndex const v = q.vertex_index(vertex);
    if (!validate_gentle(q).is_finite_dimensional) {
      throw RefusedInput(RefusedInput::Reason::InfiniteDimensional,
                         validate_gentle(q));
    }
    // each arrow of the reduced quiver is a path in q
    std::vector<std::vector<ArrowIndex>> paths;
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).source != v && q.arrow(a).target != v) {
        paths.push_back({a});
      }
    }
    auto extend = [&](auto&& self, std::vector<ArrowIndex>& path) -> void {
      for (ArrowIndex b : q.arrows_from(v)) {
        if (q.is_relation(path.back(), b)) {
          continue;
        }
        path.push_back(b);
        if (q.arrow(b).target != v) {
          paths.push_back(path);
        } else {
          self(self, path);  // loop at v; terminates by finite dimension
        }
        path.pop_back();
      }
    };
    for (ArrowIndex a : q.arrows_into(v)) {
      if (q.arrow(a).source != v) {
        std::vector<ArrowIndex> path{a};
        extend(extend, path);
      }
    }

    std::vector<std::string> vertices;
    for (VertexIndex u = 0; u < q.vertex_count(); ++u) {
      if (u != v) {
        vertices.push_back(q.vertex_id(u));
      }
    }
    std::set<std::string>  used;
    std::vector<ArrowSpec> arrows;
    for (auto const& a : q.arrows()) {
      used.insert(a.id);
    }
    for (auto const& path : paths) {
      std::string id = q.arrow(path.front()).id;
      if (path.size() > 1) {
        for (std::size_t i = 1; i < path.size(); ++i) {
          id += "." + q.arrow(path[i]).id;
        }
        while (used.contains(id)) {
          id += "'";
        }
        used.insert(id);
      }
      arrows.push_back({id, q.vertex_id(q.arrow(path.front()).source),
                        q.vertex_id(q.arrow(path.back()).target)});
    }
    std::vector<std::pair<std::string, std::string>> relations;
    for (std::size_t x = 0; x < paths.size(); ++x) {
      for (std::size_t y = 0; y < paths.size(); ++y) {
        ArrowIndex const last = paths[x].back(), first = paths[y].front();
        if (q.arrow(last).target == q.arrow(first).source
            && q.is_relation(last, first)) {
          relations.emplace_back(arrows[x].id, arrows[y].id);
        }
      }
    }
    BoundQuiver reduced(std::move(vertices), arrows, relations);
    auto        report = validate_gentle(reduced);
    return {std::move(reduced), std::move(report)};
  }

  namespace {
    StringWord joined(BoundQuiver const&                     q,
                      std::initializer_list<StringWord const*> pieces) {
      std::optional<StringWord> acc;
      for (auto const* p : pieces) {
        if (!acc) {
          acc = *p;
          continue;
        }
        auto next = concat(q, *acc, *p);
        if (!next) {
          throw QuiverError("brick family pieces do not join ("
                            + std::string(describe(*next.defect)) + ")");
        }
        acc = std::move(next.word);
      }
      return *acc;
    }

    StringWord direct_first(BoundQuiver const& q, StringWord const& cycle) {
      return cycle[0].is_direct() ? cycle : inverse(q, cycle);
    }
  }  // namespace

  std::vector<StringWord> brick_family(BoundQuiver const& q,
                                       WitnessBand const& w,
                                       std::size_t        n) {
    if (w.form != WitnessForm::TwoCycles || w.connector.is_trivial()) {
      throw std::invalid_argument(
          "brick family needs two cycles joined by a non-trivial path");
    }
    if (auto d = witness_defect(q, w)) {
      throw std::invalid_argument("invalid witness: " + *d);
    }
    bool const sign = w.connector[0].is_direct();
    auto       left = direct_first(q, w.left_cycle);
    auto       right = direct_first(q, w.right_cycle);
    if (!sign) {
      left  = inverse(q, left);
      right = inverse(q, right);
    }
    auto const back = inverse(q, w.connector);
    auto const b    = joined(q, {&left, &w.connector, &right, &back});

    std::vector<StringWord> family;
    for (std::size_t k = 1; k <= n; ++k) {
      family.push_back(k == 1 ? b : joined(q, {&family.back(), &b}));
    }
    return family;
  }

  std::size_t census_bound(BoundQuiver const& q) noexcept {
    return 2 * q.arrow_count();
  }

  std::vector<StringWord> brick_census(BoundQuiver const& q) {
    if (has_band(q)) {
      throw std::invalid_argument(
          "brick census requires a representation-finite algebra");
    }
    auto strings = enumerate_strings(q, census_bound(q));
    std::erase_if(strings, [&q](auto const& w) { return !is_brick(q, w); });
    return strings;
  }

  Decision decide(BoundQuiver const& q, DecideOptions const& options) {
    require_gentle(q);
    Decision decision;
    if (!has_band(q)) {
      decision.verdict      = Verdict::TauFinite;
      decision.brick_census = brick_census(q);
      return decision;
    }
    decision.verdict = Verdict::TauInfinite;
    auto const witness = reduce_band(q);
    auto const klass   = recognize_witness_class(q, witness);
    decision.witness       = witness;
    decision.witness_class = klass;

    auto quotient = restrict_to(q, witness.support);
    decision.reduction_trail.push_back(
        {ReductionStep::Kind::Quotient, quotient, {}, std::nullopt});

    if (klass.kind == WitnessClassKind::ATilde) {
      auto const m = recognize_atilde(quotient);
      if (m != klass.m) {
        throw ReductionFailure("support quotient is not of type Ã_m");
      }
      decision.reduction_trail.push_back(
          {ReductionStep::Kind::Recognize, std::nullopt, {}, klass});
      return decision;
    }

    decision.reduction_trail.push_back(
        {ReductionStep::Kind::Recognize, std::nullopt, {}, klass});
    if (!klass.needs_idempotent_reduction()) {
      decision.brick_family = brick_family(q, witness, options.family_size);
      return decision;
    }
    auto const& common  = q.vertex_id(source(q, witness.connector));
    auto        reduced = idempotent_reduction(quotient, common);
    auto const  m       = recognize_atilde(reduced.quiver);
    if (!reduced.gentle() || !m) {
      throw ReductionFailure(
          "removing the common vertex does not give a quiver of type Ã_m");
    }
    decision.reduction_trail.push_back(
        {ReductionStep::Kind::Idempotent, reduced.quiver, common, std::nullopt});
    WitnessClass atilde;
    atilde.kind = WitnessClassKind::ATilde;
    atilde.m    = *m;
    decision.reduction_trail.push_back(
        {ReductionStep::Kind::Recognize, std::nullopt, {}, atilde});
    return decision;
  }

}  // namespace gentlekit
