#include "gentlekit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentlekit/bands.hpp"
#include "gentlekit/bound_quiver.hpp"
#include "gentlekit/json_io.hpp"
#include "gentlekit/string_modules.hpp"
#include "gentlekit/tau_decision.hpp"
#include "gentlekit/walks.hpp"

namespace gentlekit::cli {

  using nlohmann::json;

  namespace {

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    // A failed command that has already written its diagnostics.
    struct Refusal {};

    std::string read_all(std::istream& s) {
      std::ostringstream buffer;
      buffer << s.rdbuf();
      return buffer.str();
    }

    BoundQuiver load(RunConfig const& config, std::istream& in) {
      if (!config.inline_quiver.empty()) {
        return parse_quiver(config.inline_quiver);
      }
      if (config.input_path.empty()) {
        throw UsageError("no input: give a quiver file, '-' or --quiver");
      }
      if (config.input_path == "-") {
        return parse_quiver(read_all(in));
      }
      std::ifstream file(config.input_path);
      if (!file) {
        throw UsageError("cannot read '" + config.input_path + "'");
      }
      return parse_quiver(read_all(file));
    }

    void emit(std::ostream& out, json const& j) { out << j.dump(2) << '\n'; }

    std::string class_text(WitnessClass const& c) {
      if (c.kind == WitnessClassKind::ATilde) {
        return "ATilde m=" + std::to_string(c.m);
      }
      return "TwoCycle r=" + std::to_string(c.r) + " s=" + std::to_string(c.s)
             + " t=" + std::to_string(c.t);
    }

    void report_text(std::ostream& out, GentleReport const& report) {
      out << "gentle: " << (report.is_gentle ? "yes" : "no") << '\n'
          << "finite-dimensional: " << (report.is_finite_dimensional ? "yes" : "no")
          << '\n';
      for (auto const& v : report.violations) {
        out << condition_code(v.condition) << ' ' << v.location << ": " << v.detail
            << '\n';
      }
    }

    void words_text(std::ostream& out, BoundQuiver const& q,
                    std::vector<StringWord> const& words) {
      for (auto const& w : words) {
        out << format_word(q, w) << '\n';
      }
    }

    void witness_text(std::ostream& out, BoundQuiver const& q, WitnessBand const& w,
                      WitnessClass const& c) {
      out << "form: " << static_cast<int>(w.form) << '\n'
          << "band: " << format_word(q, w.band) << '\n';
      if (w.form == WitnessForm::TwoCycles) {
        out << "b1: " << format_word(q, w.left_cycle) << '\n'
            << "omega: " << format_word(q, w.connector) << '\n'
            << "b2: " << format_word(q, w.right_cycle) << '\n';
      }
      out << "class: " << class_text(c) << '\n';
    }

    // Writes the report and signals exit status 1 unless q is accepted.
    void require_accepted(BoundQuiver const& q, std::ostream& err) {
      auto const report = validate_gentle(q);
      if (!report.accepted()) {
        err << (report.is_gentle ? "refused: infinite-dimensional\n"
                                 : "refused: not gentle\n");
        emit(err, to_json(report));
        throw Refusal{};
      }
    }

    int cmd_validate(RunConfig const& c, BoundQuiver const& q, std::ostream& out) {
      auto const report = validate_gentle(q);
      if (c.format == OutputFormat::Json) {
        emit(out, to_json(report));
      } else {
        report_text(out, report);
      }
      return static_cast<int>(report.accepted() ? ExitStatus::Ok : ExitStatus::Refused);
    }

    int cmd_decide(RunConfig const& c, BoundQuiver const& q, std::ostream& out,
                   std::ostream& err) {
      require_accepted(q, err);
      auto const d = decide(q, {c.family_size});
      if (c.format == OutputFormat::Json) {
        emit(out, to_json(q, d));
        return 0;
      }
      out << "verdict: " << (d.verdict == Verdict::TauFinite ? "finite" : "infinite")
          << '\n';
      if (d.verdict == Verdict::TauFinite) {
        out << "bricks: " << d.brick_census.size() << '\n';
        words_text(out, q, d.brick_census);
        return 0;
      }
      witness_text(out, q, *d.witness, *d.witness_class);
      if (!d.brick_family.empty()) {
        out << "brick family:\n";
        words_text(out, q, d.brick_family);
      }
      for (auto const& step : d.reduction_trail) {
        if (step.kind == ReductionStep::Kind::Idempotent) {
          out << "idempotent reduction at " << step.vertex << ": "
              << to_text(*step.quiver) << '\n';
        } else if (step.kind == ReductionStep::Kind::Recognize) {
          out << "recognized: " << class_text(*step.recognized) << '\n';
        }
      }
      return 0;
    }

    int cmd_witness(RunConfig const& c, BoundQuiver const& q, std::ostream& out,
                    std::ostream& err) {
      require_accepted(q, err);
      if (!has_band(q)) {
        if (c.format == OutputFormat::Json) {
          emit(out, nullptr);
        } else {
          out << "no band\n";
        }
        return 0;
      }
      auto const w     = reduce_band(q);
      auto const klass = recognize_witness_class(q, w);
      if (c.format == OutputFormat::Json) {
        emit(out, to_json(q, w, klass));
      } else {
        witness_text(out, q, w, klass);
      }
      return 0;
    }

    int cmd_bricks(RunConfig const& c, BoundQuiver const& q, std::ostream& out,
                   std::ostream& err) {
      require_accepted(q, err);
      std::string             kind;
      std::vector<StringWord> bricks;
      if (!has_band(q)) {
        kind   = "census";
        bricks = brick_census(q);
      } else {
        auto const w = reduce_band(q);
        if (w.form != WitnessForm::TwoCycles || w.connector.is_trivial()) {
          err << "no explicit brick family: the witness is "
              << class_text(recognize_witness_class(q, w)) << '\n';
          return static_cast<int>(ExitStatus::Refused);
        }
        kind   = "family";
        bricks = brick_family(q, w, c.family_size);
      }
      if (c.format == OutputFormat::Text) {
        out << kind << ": " << bricks.size() << '\n';
        words_text(out, q, bricks);
        return 0;
      }
      json entries = json::array();
      for (auto const& b : bricks) {
        entries.push_back({{"string", format_word(q, b)},
                           {"end_combinatorial", hom_dim_combinatorial(q, b, b).count},
                           {"end_linear", hom_dim_linear(q, b, b, c.field)}});
      }
      emit(out, {{"kind", kind},
                 {"field", c.field.to_string()},
                 {"count", bricks.size()},
                 {"bricks", entries}});
      return 0;
    }

    int cmd_hom(RunConfig const& c, BoundQuiver const& q, std::ostream& out) {
      auto const sc = parse_word(q, c.hom_c);
      auto const sd = parse_word(q, c.hom_d);
      auto const cert   = hom_dim_combinatorial(q, sc, sd);
      auto const linear = hom_dim_linear(q, sc, sd, c.field);
      if (c.format == OutputFormat::Text) {
        out << "combinatorial: " << cert.count << '\n'
            << "linear (" << c.field.to_string() << "): " << linear << '\n';
        return 0;
      }
      emit(out, {{"c", format_word(q, sc)},
                 {"d", format_word(q, sd)},
                 {"field", c.field.to_string()},
                 {"combinatorial", cert.count},
                 {"linear", linear},
                 {"agree", cert.count == linear},
                 {"certificate", to_json(q, sc, sd, cert)}});
      return 0;
    }

    int cmd_strings(RunConfig const& c, BoundQuiver const& q, std::ostream& out,
                    std::ostream& err) {
      require_accepted(q, err);
      auto const bound   = enumeration_bound(c, q.arrow_count());
      auto const strings = enumerate_strings(q, bound);
      if (c.format == OutputFormat::Text) {
        words_text(out, q, strings);
      } else {
        emit(out, {{"max_len", bound},
                   {"count", strings.size()},
                   {"strings", words_to_json(q, strings)}});
      }
      return 0;
    }

    int cmd_reduce(RunConfig const& c, BoundQuiver const& q, std::ostream& out,
                   std::ostream& err) {
      if (c.kill.empty() == c.vertex.empty()) {
        throw UsageError("reduce needs exactly one of --kill and --vertex");
      }
      std::optional<BoundQuiver> reduced;
      if (!c.vertex.empty()) {
        require_accepted(q, err);
        auto r = idempotent_reduction(q, c.vertex);
        if (!r.gentle()) {
          err << "reduced quiver is not gentle\n";
          emit(err, to_json(r.report));
        }
        reduced = std::move(r.quiver);
      } else {
        std::vector<std::string> vertices, arrows;
        for (auto const& id : c.kill) {
          if (id.starts_with("v:")) {
            vertices.push_back(id.substr(2));
          } else if (id.starts_with("a:")) {
            arrows.push_back(id.substr(2));
          } else if (q.find_vertex(id) && q.find_arrow(id)) {
            throw UsageError("'" + id + "' names a vertex and an arrow; use v: or a:");
          } else if (q.find_vertex(id)) {
            vertices.push_back(id);
          } else {
            arrows.push_back(id);
          }
        }
        reduced = quotient_by_ideal(q, vertices, arrows);
      }
      if (c.format == OutputFormat::Json) {
        emit(out, to_json(*reduced));
      } else {
        out << to_text(*reduced) << '\n';
      }
      return 0;
    }

    int dispatch(RunConfig const& c, std::istream& in, std::ostream& out,
                 std::ostream& err) {
      auto const q = load(c, in);
      if (c.command == "validate") return cmd_validate(c, q, out);
      if (c.command == "decide") return cmd_decide(c, q, out, err);
      if (c.command == "witness") return cmd_witness(c, q, out, err);
      if (c.command == "bricks") return cmd_bricks(c, q, out, err);
      if (c.command == "hom") return cmd_hom(c, q, out);
      if (c.command == "strings") return cmd_strings(c, q, out, err);
      return cmd_reduce(c, q, out, err);
    }

  }  // namespace

  std::size_t enumeration_bound(RunConfig const& config, std::size_t arrow_count) {
    if (config.max_len) {
      return *config.max_len;
    }
    if (char const* env = std::getenv("GENTLEKIT_MAX_LEN"); env && *env) {
      std::size_t pos   = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(env, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != std::string_view(env).size() || value == 0) {
        throw UsageError("GENTLEKIT_MAX_LEN must be a positive integer");
      }
      return value;
    }
    return 2 * arrow_count;
  }

  int run(std::span<std::string const> args,
          std::istream&                in,
          std::ostream&                out,
          std::ostream&                err) {
    RunConfig config;
    std::string format = "json", field = "q";
    std::size_t max_len = 0;

    CLI::App app{"Decide τ-tilting finiteness of gentle bound quivers", "gentlekit"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("input", config.input_path, "quiver file, '-' for stdin");
      sub->add_option("--quiver", config.inline_quiver, "inline quiver text or JSON");
      sub->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"json", "text"}));
      sub->add_option("--field", field, "q or gf:<p>");
    };

    auto* validate = app.add_subcommand("validate", "check gentleness");
    auto* decide   = app.add_subcommand("decide", "decide τ-tilting finiteness");
    auto* witness  = app.add_subcommand("witness", "reduced witness band and class");
    auto* bricks   = app.add_subcommand("bricks", "brick family or brick census");
    auto* hom      = app.add_subcommand("hom", "Hom dimension between string modules");
    auto* strings  = app.add_subcommand("strings", "canonical strings up to a length");
    auto* reduce   = app.add_subcommand("reduce", "quotient or idempotent reduction");
    for (auto* sub : {validate, decide, witness, bricks, hom, strings, reduce}) {
      add_common(sub);
    }
    for (auto* sub : {decide, bricks}) {
      sub->add_option("--n", config.family_size, "brick family size")
          ->check(CLI::PositiveNumber);
    }
    hom->add_option("--c", config.hom_c, "source string")->required();
    hom->add_option("--d", config.hom_d, "target string")->required();
    auto* max_len_option =
        strings->add_option("--max-len", max_len, "maximal string length")
            ->check(CLI::PositiveNumber);
    reduce->add_option("--kill", config.kill, "vertices and arrows to remove")
        ->expected(1, -1);
    reduce->add_option("--vertex", config.vertex, "vertex to remove by idempotent");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : static_cast<int>(ExitStatus::Usage);
    }

    for (auto* sub : app.get_subcommands()) {
      config.command = sub->get_name();
    }
    if (max_len_option->count() > 0) {
      config.max_len = max_len;
    }
    config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;

    try {
      config.field = FieldSpec::parse(field);
      return dispatch(config, in, out, err);
    } catch (Refusal const&) {
      return static_cast<int>(ExitStatus::Refused);
    } catch (RefusedInput const& e) {
      err << e.what() << '\n';
      emit(err, to_json(e.report()));
      return static_cast<int>(ExitStatus::Refused);
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return static_cast<int>(ExitStatus::Usage);
    } catch (UsageError const& e) {
      err << e.what() << '\n';
      return static_cast<int>(ExitStatus::Usage);
    } catch (QuiverError const& e) {
      err << e.what() << '\n';
      return static_cast<int>(ExitStatus::Usage);
    } catch (std::invalid_argument const& e) {
      err << e.what() << '\n';
      return static_cast<int>(ExitStatus::Usage);
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return static_cast<int>(ExitStatus::Internal);
    }
  }

}  // namespace gentlekit::cli
