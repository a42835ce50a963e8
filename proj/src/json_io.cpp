#include "gentlekit/json_io.hpp"

#include <algorithm>

namespace gentlekit {

  using nlohmann::json;

  json to_json(WitnessClass const& c) {
    if (c.kind == WitnessClassKind::ATilde) {
      return {{"type", "ATilde"}, {"m", c.m}};
    }
    return {{"type", "TwoCycle"},
            {"r", c.r},
            {"s", c.s},
            {"t", c.t},
            {"idempotent_reduction", c.needs_idempotent_reduction()}};
  }

  WitnessClass class_from_json(json const& j) {
    WitnessClass c;
    auto const   type = j.at("type").get<std::string>();
    if (type == "ATilde") {
      c.kind = WitnessClassKind::ATilde;
      c.m    = j.at("m").get<std::size_t>();
    } else if (type == "TwoCycle") {
      c.kind = WitnessClassKind::TwoCycle;
      c.r    = j.at("r").get<std::size_t>();
      c.s    = j.at("s").get<std::size_t>();
      c.t    = j.at("t").get<std::size_t>();
    } else {
      throw QuiverError("unknown witness class '" + type + "'");
    }
    return c;
  }

  json to_json(BoundQuiver const& q, Support const& s) {
    json vertices = json::array(), arrows = json::array();
    for (VertexIndex v : s.vertices) {
      vertices.push_back(q.vertex_id(v));
    }
    for (ArrowIndex a : s.arrows) {
      arrows.push_back(q.arrow(a).id);
    }
    return {{"vertices", vertices}, {"arrows", arrows}};
  }

  Support support_from_json(BoundQuiver const& q, json const& j) {
    Support s;
    for (auto const& v : j.at("vertices")) {
      s.vertices.push_back(q.vertex_index(v.get<std::string>()));
    }
    for (auto const& a : j.at("arrows")) {
      s.arrows.push_back(q.arrow_index(a.get<std::string>()));
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    std::sort(s.arrows.begin(), s.arrows.end());
    return s;
  }

  json to_json(BoundQuiver const&                 q,
               WitnessBand const&                 w,
               std::optional<WitnessClass> const& c) {
    json j{{"form", static_cast<int>(w.form)},
           {"band", format_word(q, w.band)},
           {"support", to_json(q, w.support)}};
    if (w.form == WitnessForm::TwoCycles) {
      j["b1"]    = format_word(q, w.left_cycle);
      j["omega"] = format_word(q, w.connector);
      j["b2"]    = format_word(q, w.right_cycle);
    } else {
      j["b1"] = j["omega"] = j["b2"] = nullptr;
    }
    j["class"] = c ? to_json(*c) : json(nullptr);
    return j;
  }

  WitnessBand witness_from_json(BoundQuiver const& q, json const& j) {
    WitnessBand w;
    int const   form = j.at("form").get<int>();
    if (form == 1) {
      w.form = WitnessForm::SimpleCycle;
    } else if (form == 2) {
      w.form        = WitnessForm::TwoCycles;
      w.left_cycle  = parse_word(q, j.at("b1").get<std::string>());
      w.connector   = parse_word(q, j.at("omega").get<std::string>());
      w.right_cycle = parse_word(q, j.at("b2").get<std::string>());
    } else {
      throw QuiverError("witness form must be 1 or 2");
    }
    w.band    = parse_word(q, j.at("band").get<std::string>());
    w.support = support_from_json(q, j.at("support"));
    return w;
  }

  json to_json(BoundQuiver const& q, StringWord const& c, StringWord const& d,
               HomCertificate const& cert) {
    json pairs = json::array();
    for (auto const& p : cert.pairs) {
      pairs.push_back(
          {{"top", {p.top.begin, p.top.end}},
           {"bottom", {p.bottom.begin, p.bottom.end}},
           {"match", p.match == Match::Equal ? "equal" : "inverse"},
           {"substring", format_word(q, substring(q, c, p.top.begin, p.top.end))}});
    }
    (void) d;
    return {{"count", cert.count}, {"pairs", pairs}};
  }

  json words_to_json(BoundQuiver const& q, std::vector<StringWord> const& words) {
    json out = json::array();
    for (auto const& w : words) {
      out.push_back(format_word(q, w));
    }
    return out;
  }

  std::vector<StringWord> words_from_json(BoundQuiver const& q, json const& j) {
    std::vector<StringWord> out;
    for (auto const& w : j) {
      out.push_back(parse_word(q, w.get<std::string>()));
    }
    return out;
  }

  namespace {
    std::string_view step_name(ReductionStep::Kind k) {
      switch (k) {
        case ReductionStep::Kind::Quotient: return "quotient";
        case ReductionStep::Kind::Idempotent: return "idempotent";
        case ReductionStep::Kind::Recognize: return "recognize";
      }
      return "?";
    }
  }  // namespace

  json to_json(BoundQuiver const& q, Decision const& d) {
    json trail = json::array();
    for (auto const& step : d.reduction_trail) {
      json s{{"step", step_name(step.kind)}};
      if (step.quiver) {
        s["quiver"] = to_json(*step.quiver);
      }
      if (step.kind == ReductionStep::Kind::Idempotent) {
        s["vertex"] = step.vertex;
      }
      if (step.recognized) {
        s["class"] = to_json(*step.recognized);
      }
      trail.push_back(s);
    }
    bool const finite = d.verdict == Verdict::TauFinite;
    return {{"verdict", finite ? "finite" : "infinite"},
            {"brick_census", words_to_json(q, d.brick_census)},
            {"brick_count", d.brick_census.size()},
            {"witness", d.witness ? to_json(q, *d.witness, d.witness_class)
                                  : json(nullptr)},
            {"brick_family", words_to_json(q, d.brick_family)},
            {"reduction_trail", trail}};
  }

  Decision decision_from_json(BoundQuiver const& q, json const& j) {
    Decision d;
    auto const verdict = j.at("verdict").get<std::string>();
    if (verdict != "finite" && verdict != "infinite") {
      throw QuiverError("verdict must be \"finite\" or \"infinite\"");
    }
    d.verdict = verdict == "finite" ? Verdict::TauFinite : Verdict::TauInfinite;
    d.brick_census = words_from_json(q, j.at("brick_census"));
    if (!j.at("witness").is_null()) {
      d.witness = witness_from_json(q, j.at("witness"));
      if (!j.at("witness").at("class").is_null()) {
        d.witness_class = class_from_json(j.at("witness").at("class"));
      }
    }
    d.brick_family = words_from_json(q, j.at("brick_family"));
    for (auto const& s : j.at("reduction_trail")) {
      ReductionStep step{ReductionStep::Kind::Quotient, std::nullopt, {}, std::nullopt};
      auto const    name = s.at("step").get<std::string>();
      if (name == "idempotent") {
        step.kind   = ReductionStep::Kind::Idempotent;
        step.vertex = s.at("vertex").get<std::string>();
      } else if (name == "recognize") {
        step.kind = ReductionStep::Kind::Recognize;
      } else if (name != "quotient") {
        throw QuiverError("unknown reduction step '" + name + "'");
      }
      if (s.contains("quiver")) {
        step.quiver = quiver_from_json(s.at("quiver"));
      }
      if (s.contains("class")) {
        step.recognized = class_from_json(s.at("class"));
      }
      d.reduction_trail.push_back(std::move(step));
    }
    return d;
  }

}  // namespace gentlekit
