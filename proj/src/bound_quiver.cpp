#include "gentlekit/bound_quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gentlekit {

  ParseError::ParseError(std::string const& what,
                         std::size_t        line,
                         std::size_t        column)
      : QuiverError("line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  namespace {
    constexpr std::string_view reserved_chars = ":;,#()[]{}\"^";

    bool is_id_char(char c) noexcept {
      auto const u = static_cast<unsigned char>(c);
      return u > 0x20 && u != 0x7f
             && reserved_chars.find(c) == std::string_view::npos;
    }

    template <typename Index>
    std::vector<std::size_t> ranks_of(std::vector<Index> const& order) {
      std::vector<std::size_t> rank(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
      }
      return rank;
    }
  }  // namespace

  bool is_valid_id(std::string_view id) noexcept {
    if (id.empty() || id.find("->") != std::string_view::npos) {
      return false;
    }
    return std::all_of(id.begin(), id.end(), is_id_char);
  }

  BoundQuiver::BoundQuiver(
      std::vector<std::string>                                vertices,
      std::vector<ArrowSpec> const&                           arrows,
      std::vector<std::pair<std::string, std::string>> const& relations)
      : vertices_(std::move(vertices)) {
    for (auto const& v : vertices_) {
      if (!is_valid_id(v)) {
        throw QuiverError("invalid vertex id '" + v + "'");
      }
    }
    vertex_order_.resize(vertices_.size());
    std::iota(vertex_order_.begin(), vertex_order_.end(), VertexIndex{0});
    std::sort(vertex_order_.begin(),
              vertex_order_.end(),
              [this](VertexIndex a, VertexIndex b) {
                return vertices_[a] < vertices_[b];
              });
    for (std::size_t i = 1; i < vertex_order_.size(); ++i) {
      if (vertices_[vertex_order_[i - 1]] == vertices_[vertex_order_[i]]) {
        throw QuiverError("duplicate vertex id '"
                          + vertices_[vertex_order_[i]] + "'");
      }
    }
    vertex_rank_ = ranks_of(vertex_order_);

    arrows_.reserve(arrows.size());
    for (auto const& spec : arrows) {
      if (!is_valid_id(spec.id)) {
        throw QuiverError("invalid arrow id '" + spec.id + "'");
      }
      auto const s = find_vertex(spec.source);
      auto const t = find_vertex(spec.target);
      if (!s || !t) {
        throw QuiverError("arrow '" + spec.id + "' uses undeclared vertex '"
                          + (s ? spec.target : spec.source) + "'");
      }
      arrows_.push_back(Arrow{spec.id, *s, *t});
    }
    arrow_order_.resize(arrows_.size());
    std::iota(arrow_order_.begin(), arrow_order_.end(), ArrowIndex{0});
    std::sort(
        arrow_order_.begin(), arrow_order_.end(), [this](auto a, auto b) {
          return arrows_[a].id < arrows_[b].id;
        });
    for (std::size_t i = 1; i < arrow_order_.size(); ++i) {
      if (arrows_[arrow_order_[i - 1]].id == arrows_[arrow_order_[i]].id) {
        throw QuiverError("duplicate arrow id '" + arrows_[arrow_order_[i]].id
                          + "'");
      }
    }
    arrow_rank_ = ranks_of(arrow_order_);

    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (ArrowIndex a : arrow_order_) {
      out_[arrows_[a].source].push_back(a);
      in_[arrows_[a].target].push_back(a);
    }

    relation_table_.assign(arrows_.size() * arrows_.size(), false);
    for (auto const& [first_id, second_id] : relations) {
      auto const first  = find_arrow(first_id);
      auto const second = find_arrow(second_id);
      if (!first || !second) {
        throw QuiverError("relation " + first_id + " " + second_id
                          + " uses unknown arrow '"
                          + (first ? second_id : first_id) + "'");
      }
      if (arrows_[*first].target != arrows_[*second].source) {
        throw QuiverError("relation " + first_id + " " + second_id
                          + " is not composable");
      }
      auto const slot = *first * arrows_.size() + *second;
      if (relation_table_[slot]) {
        throw QuiverError("duplicate relation " + first_id + " " + second_id);
      }
      relation_table_[slot] = true;
      relations_.push_back(Relation{*first, *second});
    }
    std::sort(relations_.begin(), relations_.end());
  }

  std::optional<VertexIndex>
  BoundQuiver::find_vertex(std::string_view id) const {
    auto it = std::lower_bound(
        vertex_order_.begin(),
        vertex_order_.end(),
        id,
        [this](VertexIndex v, std::string_view x) { return vertices_[v] < x; });
    if (it != vertex_order_.end() && vertices_[*it] == id) {
      return *it;
    }
    return std::nullopt;
  }

  std::optional<ArrowIndex> BoundQuiver::find_arrow(std::string_view id) const {
    auto it = std::lower_bound(
        arrow_order_.begin(),
        arrow_order_.end(),
        id,
        [this](ArrowIndex a, std::string_view x) { return arrows_[a].id < x; });
    if (it != arrow_order_.end() && arrows_[*it].id == id) {
      return *it;
    }
    return std::nullopt;
  }

  VertexIndex BoundQuiver::vertex_index(std::string_view id) const {
    if (auto v = find_vertex(id)) {
      return *v;
    }
    throw QuiverError("unknown vertex '" + std::string(id) + "'");
  }

  ArrowIndex BoundQuiver::arrow_index(std::string_view id) const {
    if (auto a = find_arrow(id)) {
      return *a;
    }
    throw QuiverError("unknown arrow '" + std::string(id) + "'");
  }

  bool BoundQuiver::operator==(BoundQuiver const& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_
           && relations_ == other.relations_;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class Tok { Id, Colon, Semicolon, Comma, Arrow, End };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    std::string_view describe(Tok t) {
      switch (t) {
        case Tok::Id: return "identifier";
        case Tok::Colon: return "':'";
        case Tok::Semicolon: return "';'";
        case Tok::Comma: return "','";
        case Tok::Arrow: return "'->'";
        case Tok::End: return "end of input";
      }
      return "?";
    }

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> tokens;
      std::size_t        line = 1, column = 1;
      std::size_t        i    = 0;
      auto               advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
          if (text[i] == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
      };
      while (i < text.size()) {
        char const c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
        } else if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            advance(1);
          }
        } else if (c == ':' || c == ';' || c == ',') {
          tokens.push_back({c == ':'   ? Tok::Colon
                            : c == ';' ? Tok::Semicolon
                                       : Tok::Comma,
                            std::string(1, c),
                            line,
                            column});
          advance(1);
        } else if (text.substr(i, 2) == "->") {
          tokens.push_back({Tok::Arrow, "->", line, column});
          advance(2);
        } else if (is_id_char(c)) {
          std::size_t j = i;
          while (j < text.size() && is_id_char(text[j])
                 && text.substr(j, 2) != "->") {
            ++j;
          }
          tokens.push_back(
              {Tok::Id, std::string(text.substr(i, j - i)), line, column});
          advance(j - i);
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line,
                           column);
        }
      }
      tokens.push_back({Tok::End, "", line, column});
      return tokens;
    }

    class TextParser {
     public:
      explicit TextParser(std::string_view text) : tokens_(tokenize(text)) {}

      BoundQuiver parse() {
        std::set<std::string> seen_sections;
        std::string           previous;
        while (peek().kind != Tok::End) {
          Token const name = expect(Tok::Id);
          expect(Tok::Colon);
          int const order = section_order(name);
          if (previous.empty() && name.text != "vertices") {
            throw error_at(name, "expected 'vertices:' section first");
          }
          if (order <= section_order_of(previous)) {
            throw error_at(name,
                           "section '" + name.text + "' out of order or repeated");
          }
          previous = name.text;
          if (name.text == "vertices") {
            parse_vertices();
          } else if (name.text == "arrows") {
            parse_arrows();
          } else {
            parse_relations();
          }
          if (peek().kind == Tok::Semicolon) {
            next();
          } else if (peek().kind != Tok::End) {
            throw error_at(peek(), "expected ';' or end of input");
          }
        }
        if (previous.empty()) {
          throw error_at(peek(), "expected 'vertices:' section first");
        }
        return BoundQuiver(vertices_, arrows_, relations_);
      }

     private:
      std::vector<Token>                               tokens_;
      std::size_t                                      pos_ = 0;
      std::vector<std::string>                         vertices_;
      std::vector<ArrowSpec>                           arrows_;
      std::vector<std::pair<std::string, std::string>> relations_;
      std::map<std::string, std::pair<std::string, std::string>> arrow_ends_;

      static ParseError error_at(Token const& t, std::string const& what) {
        return ParseError(what, t.line, t.column);
      }

      int section_order(Token const& name) const {
        int const order = section_order_of(name.text);
        if (order < 0) {
          throw error_at(name, "unknown section '" + name.text + "'");
        }
        return order;
      }

      static int section_order_of(std::string const& name) {
        if (name == "vertices") return 0;
        if (name == "arrows") return 1;
        if (name == "relations") return 2;
        return -1;
      }

      Token const& peek() const { return tokens_[pos_]; }
      Token const& next() { return tokens_[pos_++]; }

      Token const& expect(Tok kind) {
        if (peek().kind != kind) {
          throw error_at(peek(),
                         "expected " + std::string(describe(kind)) + ", found "
                             + std::string(describe(peek().kind)));
        }
        return next();
      }

      bool at_section_end() const {
        return peek().kind == Tok::Semicolon || peek().kind == Tok::End;
      }

      void parse_vertices() {
        std::set<std::string> seen;
        while (!at_section_end()) {
          Token const v = expect(Tok::Id);
          if (!seen.insert(v.text).second) {
            throw error_at(v, "duplicate vertex id '" + v.text + "'");
          }
          vertices_.push_back(v.text);
        }
      }

      Token const& declared_vertex() {
        Token const& v = expect(Tok::Id);
        if (std::find(vertices_.begin(), vertices_.end(), v.text)
            == vertices_.end()) {
          throw error_at(v, "undeclared vertex '" + v.text + "'");
        }
        return v;
      }

      void parse_arrows() {
        if (at_section_end()) {
          return;
        }
        while (true) {
          Token const id = expect(Tok::Id);
          expect(Tok::Colon);
          Token const src = declared_vertex();
          expect(Tok::Arrow);
          Token const tgt = declared_vertex();
          if (!arrow_ends_.emplace(id.text, std::pair{src.text, tgt.text})
                   .second) {
            throw error_at(id, "duplicate arrow id '" + id.text + "'");
          }
          arrows_.push_back({id.text, src.text, tgt.text});
          if (peek().kind != Tok::Comma) {
            break;
          }
          next();
        }
      }

      void parse_relations() {
        if (at_section_end()) {
          return;
        }
        std::set<std::pair<std::string, std::string>> seen;
        while (true) {
          Token const first  = known_arrow();
          Token const second = known_arrow();
          if (arrow_ends_[first.text].second
              != arrow_ends_[second.text].first) {
            throw error_at(first,
                           "relation " + first.text + " " + second.text
                               + " is not composable");
          }
          if (!seen.emplace(first.text, second.text).second) {
            throw error_at(first,
                           "duplicate relation " + first.text + " "
                               + second.text);
          }
          relations_.emplace_back(first.text, second.text);
          if (peek().kind != Tok::Comma) {
            break;
          }
          next();
        }
      }

      Token const& known_arrow() {
        Token const& a = expect(Tok::Id);
        if (!arrow_ends_.contains(a.text)) {
          throw error_at(a, "unknown arrow '" + a.text + "'");
        }
        return a;
      }
    };

    std::string id_from_json(nlohmann::json const& j, char const* what) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
      }
      throw QuiverError(std::string("expected a string ") + what + " id");
    }
  }  // namespace

  BoundQuiver parse_quiver_text(std::string_view text) {
    return TextParser(text).parse();
  }

  BoundQuiver quiver_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("vertices")) {
      throw QuiverError("quiver JSON must be an object with \"vertices\"");
    }
    std::vector<std::string> vertices;
    for (auto const& v : j.at("vertices")) {
      vertices.push_back(id_from_json(v, "vertex"));
    }
    std::vector<ArrowSpec> arrows;
    if (j.contains("arrows")) {
      for (auto const& a : j.at("arrows")) {
        if (!a.is_object() || !a.contains("id") || !a.contains("src")
            || !a.contains("tgt")) {
          throw QuiverError("arrow entries need \"id\", \"src\" and \"tgt\"");
        }
        arrows.push_back({id_from_json(a.at("id"), "arrow"),
                          id_from_json(a.at("src"), "vertex"),
                          id_from_json(a.at("tgt"), "vertex")});
      }
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("relations")) {
      for (auto const& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) {
          throw QuiverError("relations must be pairs of arrow ids");
        }
        relations.emplace_back(id_from_json(r[0], "arrow"),
                               id_from_json(r[1], "arrow"));
      }
    }
    return BoundQuiver(std::move(vertices), arrows, relations);
  }

  BoundQuiver parse_quiver(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw QuiverError(std::string("invalid JSON: ") + e.what());
      }
      return quiver_from_json(j);
    }
    return parse_quiver_text(text);
  }

  std::string to_text(BoundQuiver const& q) {
    std::ostringstream out;
    out << "vertices:";
    for (auto const& v : q.vertices()) {
      out << ' ' << v;
    }
    out << " ; arrows:";
    char const* sep = " ";
    for (auto const& a : q.arrows()) {
      out << sep << a.id << ": " << q.vertex_id(a.source) << " -> "
          << q.vertex_id(a.target);
      sep = ", ";
    }
    out << " ; relations:";
    sep = " ";
    for (auto const& r : q.relations()) {
      out << sep << q.arrow(r.first).id << ' ' << q.arrow(r.second).id;
      sep = ", ";
    }
    return out.str();
  }

  nlohmann::json to_json(BoundQuiver const& q) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (auto const& v : q.vertices()) {
      j["vertices"].push_back(v);
    }
    j["arrows"] = nlohmann::json::array();
    for (auto const& a : q.arrows()) {
      j["arrows"].push_back({{"id", a.id},
                             {"src", q.vertex_id(a.source)},
                             {"tgt", q.vertex_id(a.target)}});
    }
    j["relations"] = nlohmann::json::array();
    for (auto const& r : q.relations()) {
      j["relations"].push_back({q.arrow(r.first).id, q.arrow(r.second).id});
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Gentleness
  ////////////////////////////////////////////////////////////////////////

  std::string_view condition_code(GentleCondition c) noexcept {
    switch (c) {
      case GentleCondition::DegreeBound: return "G1";
      case GentleCondition::ForwardContinuation: return "G2";
      case GentleCondition::BackwardContinuation: return "G3";
      case GentleCondition::FiniteDimension: return "G4";
    }
    return "?";
  }

  GentleCondition condition_from_code(std::string_view code) {
    for (auto c : {GentleCondition::DegreeBound,
                   GentleCondition::ForwardContinuation,
                   GentleCondition::BackwardContinuation,
                   GentleCondition::FiniteDimension}) {
      if (condition_code(c) == code) {
        return c;
      }
    }
    throw QuiverError("unknown gentleness condition '" + std::string(code)
                      + "'");
  }

  namespace {
    std::string join_ids(BoundQuiver const&             q,
                         std::vector<ArrowIndex> const& arrows,
                         std::string_view               sep) {
      std::string out;
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i > 0) {
          out += sep;
        }
        out += q.arrow(arrows[i]).id;
      }
      return out;
    }

    // A cycle in the graph on arrows whose edges are the composable pairs
    // outside the ideal, rotated to start at its least arrow.
    std::optional<std::vector<ArrowIndex>>
    relation_free_cycle(BoundQuiver const& q) {
      enum class Mark { Fresh, Active, Done };
      std::vector<Mark>       mark(q.arrow_count(), Mark::Fresh);
      std::vector<ArrowIndex> stack;

      std::optional<std::vector<ArrowIndex>> found;
      auto visit = [&](auto&& self, ArrowIndex a) -> bool {
        mark[a] = Mark::Active;
        stack.push_back(a);
        for (ArrowIndex b : q.arrows_from(q.arrow(a).target)) {
          if (q.is_relation(a, b)) {
            continue;
          }
          if (mark[b] == Mark::Active) {
            auto it = std::find(stack.begin(), stack.end(), b);
            found   = std::vector<ArrowIndex>(it, stack.end());
            return true;
          }
          if (mark[b] == Mark::Fresh && self(self, b)) {
            return true;
          }
        }
        stack.pop_back();
        mark[a] = Mark::Done;
        return false;
      };
      for (ArrowIndex a : q.arrows_in_canonical_order()) {
        if (mark[a] == Mark::Fresh && visit(visit, a)) {
          break;
        }
      }
      if (found) {
        auto least = std::min_element(
            found->begin(), found->end(), [&q](ArrowIndex x, ArrowIndex y) {
              return q.arrow_rank(x) < q.arrow_rank(y);
            });
        std::rotate(found->begin(), least, found->end());
      }
      return found;
    }

    void check_continuations(BoundQuiver const&      q,
                             ArrowIndex              beta,
                             std::span<ArrowIndex const> neighbours,
                             bool                    forward,
                             std::vector<Violation>& out) {
      std::vector<ArrowIndex> in_ideal, outside;
      for (ArrowIndex gamma : neighbours) {
        bool const rel
            = forward ? q.is_relation(beta, gamma) : q.is_relation(gamma, beta);
        (rel ? in_ideal : outside).push_back(gamma);
      }
      auto const cond = forward ? GentleCondition::ForwardContinuation
                                : GentleCondition::BackwardContinuation;
      auto const location = "arrow " + q.arrow(beta).id;
      std::string_view const side = forward ? "after" : "before";
      if (in_ideal.size() > 1) {
        out.push_back({cond,
                       location,
                       std::to_string(in_ideal.size()) + " arrows " + std::string(side)
                           + " it form relations: "
                           + join_ids(q, in_ideal, ", ")});
      }
      if (outside.size() > 1) {
        out.push_back({cond,
                       location,
                       std::to_string(outside.size()) + " arrows "
                           + std::string(side)
                           + " it avoid the ideal: " + join_ids(q, outside, ", ")});
      }
    }
  }  // namespace

  GentleReport validate_gentle(BoundQuiver const& q) {
    GentleReport report;
    auto&        out = report.violations;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      if (q.arrows_from(v).size() > 2) {
        out.push_back({GentleCondition::DegreeBound,
                       "vertex " + q.vertex_id(v),
                       std::to_string(q.arrows_from(v).size())
                           + " arrows start here"});
      }
      if (q.arrows_into(v).size() > 2) {
        out.push_back({GentleCondition::DegreeBound,
                       "vertex " + q.vertex_id(v),
                       std::to_string(q.arrows_into(v).size())
                           + " arrows end here"});
      }
    }
    for (ArrowIndex beta = 0; beta < q.arrow_count(); ++beta) {
      auto const& a = q.arrow(beta);
      check_continuations(q, beta, q.arrows_from(a.target), true, out);
      check_continuations(q, beta, q.arrows_into(a.source), false, out);
    }
    report.is_gentle = out.empty();
    if (auto cycle = relation_free_cycle(q)) {
      report.is_finite_dimensional = false;
      out.push_back({GentleCondition::FiniteDimension,
                     "cycle " + join_ids(q, *cycle, " "),
                     "oriented cycle avoiding the ideal"});
    }
    std::sort(out.begin(), out.end());
    return report;
  }

  nlohmann::json to_json(GentleReport const& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (auto const& v : report.violations) {
      violations.push_back({{"condition", condition_code(v.condition)},
                            {"location", v.location},
                            {"detail", v.detail}});
    }
    return {{"is_gentle", report.is_gentle},
            {"is_finite_dimensional", report.is_finite_dimensional},
            {"violations", violations}};
  }

  GentleReport report_from_json(nlohmann::json const& j) {
    GentleReport report;
    report.is_gentle             = j.at("is_gentle").get<bool>();
    report.is_finite_dimensional = j.at("is_finite_dimensional").get<bool>();
    for (auto const& v : j.at("violations")) {
      report.violations.push_back(
          {condition_from_code(v.at("condition").get<std::string>()),
           v.at("location").get<std::string>(),
           v.at("detail").get<std::string>()});
    }
    return report;
  }

  RefusedInput::RefusedInput(Reason reason, GentleReport report)
      : std::runtime_error(reason == Reason::NotGentle
                               ? "bound quiver is not gentle"
                               : "bound quiver algebra is infinite-dimensional"),
        reason_(reason),
        report_(std::move(report)) {}

  void require_gentle(BoundQuiver const& q) {
    auto report = validate_gentle(q);
    if (!report.is_gentle) {
      throw RefusedInput(RefusedInput::Reason::NotGentle, std::move(report));
    }
    if (!report.is_finite_dimensional) {
      throw RefusedInput(RefusedInput::Reason::InfiniteDimensional,
                         std::move(report));
    }
  }

}  // namespace gentlekit
