#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "omt/error.hpp"
#include "omt/extension.hpp"
#include "omt/fixtures.hpp"
#include "omt/induction.hpp"
#include "omt/io.hpp"
#include "omt/lattice.hpp"
#include "omt/tables.hpp"
#include "omt/verify.hpp"

namespace omt::cli {
namespace {

constexpr std::string_view kBuiltin = "builtin:";

Oml load_lattice(const std::string& arg) {
  if (arg.starts_with(kBuiltin)) return fixtures::lattice(arg.substr(kBuiltin.size()));
  return Oml::build(parse_lattice(read_text_file(arg)));
}

/// A path, or builtin:le<N> for ({1..N}, <=).
TimeFrame load_frame(const std::string& arg) {
  if (arg.starts_with(kBuiltin)) {
    const auto rest = arg.substr(kBuiltin.size());
    if (rest.starts_with("le") && rest.size() > 2 && rest.find_first_not_of("0123456789", 2) == std::string::npos) {
      return fixtures::le(std::stoul(rest.substr(2)));
    }
    throw Error(ErrorKind::InvalidSpec, "unknown built-in frame '" + rest + "'");
  }
  return parse_frame(read_text_file(arg));
}

struct LoadedOps {
  TimeSet points;
  OperatorQuadruple ops;
  std::string name;
};

/// frame:<file> | example2 | table:<file>
LoadedOps load_ops(const std::string& spec, const Oml& L, std::optional<std::size_t> frame_size) {
  const auto check_size = [&](std::size_t n) {
    if (frame_size && *frame_size != n) {
      throw Error(ErrorKind::Incompatible, "--frame-size " + std::to_string(*frame_size) + " does not match " +
                                               std::to_string(n) + " time points of '" + spec + "'");
    }
  };
  if (spec == "example2") {
    const std::size_t n = frame_size.value_or(5);
    return {TimeSet::numbered(n), fixtures::rule_quadruple(L, n), "example2"};
  }
  if (spec.starts_with("frame:")) {
    const auto f = load_frame(spec.substr(6));
    check_size(f.size());
    return {f.points(), OperatorQuadruple::induced_by(f.relation()), f.name()};
  }
  if (spec.starts_with("table:")) {
    auto file = parse_operators(read_text_file(spec.substr(6)), L);
    check_size(file.points.size());
    return {file.points, file.ops, file.name};
  }
  throw Error(ErrorKind::InvalidSpec, "unknown operator spec '" + spec + "' (expected frame:<file>, example2 or table:<file>)");
}

std::uint64_t env_budget() {
  const char* raw = std::getenv("OMT_BUDGET");
  if (!raw || !*raw) return kDefaultBudget;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19 || std::stoull(s) == 0) {
    throw Error(ErrorKind::InvalidSpec, "OMT_BUDGET must be a positive integer, got '" + s + "'");
  }
  return std::stoull(s);
}

struct QuantOptions {
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 0;
  unsigned threads = 1;

  void add_to(CLI::App* app) {
    app->add_option("--budget", budget, "Largest number of cases enumerated exhaustively")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Seed for sampled quantification");
    app->add_option("--samples", samples, "Samples drawn beyond the budget (0: as many as the budget)");
    app->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  Quantifier make() const {
    Quantifier q;
    q.budget = budget ? *budget : env_budget();
    q.seed = seed;
    q.samples = samples;
    q.threads = threads;
    return q;
  }
};

TenseOperator parse_operator_word(const std::string& word, const OperatorQuadruple& ops) {
  std::optional<TenseOperator> result;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::optional<TenseKind> k;
    for (auto kind : kAllTenses) {
      if (to_char(kind) == *it) k = kind;
    }
    if (!k) throw Error(ErrorKind::InvalidSpec, "operator word '" + word + "' may only use P, F, H and G");
    result = result ? compose(ops[*k], *result) : ops[*k];
  }
  if (!result) throw Error(ErrorKind::InvalidSpec, "empty operator word");
  return *result;
}

int print_report(const VerifyReport& report, const std::string& format, std::ostream& out) {
  out << (format == "json-lines" ? render_json_lines(report) : render_text(report));
  return report.failed() ? 1 : 0;
}

void describe_excluded(const Oml& L, const TimeSet& points, const InducedRelationReport& r, std::ostream& out) {
  out << "# " << (r.exhaustive ? "exhaustive" : "sampled, upper bound") << " over " << r.cases << " propositions\n";
  for (const auto& e : r.excluded) {
    out << "# excluded " << points.name(e.s) << ">" << points.name(e.t) << ": q = " << format_values(L, e.q)
        << " violates " << e.inequality << " (" << L.element_name(e.lhs) << " <= " << L.element_name(e.rhs)
        << " fails)\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tense operators on finite orthomodular lattices", "omt"};
  app.require_subcommand(1);

  std::string lattice_arg, frame_arg, prop_arg, ops_arg, extra_arg, format = "text", mode = "pf", suite = "all";
  std::string relation = "r3", words = "P,F,H,G", demo;
  std::optional<std::size_t> frame_size;
  bool replay = false;
  QuantOptions quant;
  const auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
  };

  auto* check = app.add_subcommand("check-lattice", "Validate a lattice and test the orthomodular law");
  check->add_option("lattice", lattice_arg, "Lattice file or builtin:<name>")->required();
  format_opt(check);

  auto* eval = app.add_subcommand("eval", "Tabulate tense operators on propositions");
  eval->add_option("--lattice", lattice_arg)->required();
  eval->add_option("--frame", frame_arg)->required();
  eval->add_option("--prop", prop_arg, "Proposition file")->required();
  eval->add_option("--ops", words, "Comma-separated operator words such as P,G,PG");

  auto* sasaki = app.add_subcommand("sasaki-table", "Print the x*y and x->y operation tables");
  sasaki->add_option("--lattice", lattice_arg)->required();

  auto* induce = app.add_subcommand("induce", "Induce a time relation from given operators");
  induce->add_option("--lattice", lattice_arg)->required();
  induce->add_option("--ops", ops_arg, "frame:<file>, example2 or table:<file>")->required();
  induce->add_option("--frame-size", frame_size)->check(CLI::PositiveNumber);
  induce->add_option("--relation", relation, "r1, r2 or r3")->check(CLI::IsMember({"r1", "r2", "r3"}));
  quant.add_to(induce);

  auto* classify = app.add_subcommand("classify", "Decide whether operators are induced by a time frame");
  classify->add_option("--lattice", lattice_arg)->required();
  classify->add_option("--ops", ops_arg)->required();
  classify->add_option("--frame-size", frame_size)->check(CLI::PositiveNumber);
  quant.add_to(classify);

  auto* roundtrip = app.add_subcommand("roundtrip", "Frame to operators to relation and back");
  roundtrip->add_option("--lattice", lattice_arg)->required();
  roundtrip->add_option("--frame", frame_arg)->required();
  format_opt(roundtrip);
  quant.add_to(roundtrip);

  auto* extend = app.add_subcommand("extend", "Tabulate propositions on the extended frame");
  extend->add_option("--lattice", lattice_arg)->required();
  extend->add_option("--frame", frame_arg)->required();
  extend->add_option("--prop", prop_arg)->required();
  extend->add_option("--mode", mode)->check(CLI::IsMember({"pf", "hg"}));
  quant.add_to(extend);

  auto* verify = app.add_subcommand("verify", "Run law suites");
  verify->add_option("--lattice", lattice_arg)->required();
  auto* frame_opt = verify->add_option("--frame", frame_arg);
  verify->add_option("--ops", ops_arg)->excludes(frame_opt);
  verify->add_option("--frame-size", frame_size)->check(CLI::PositiveNumber);
  verify->add_option("--extra-ops", extra_arg, "Operators additionally examined by thm6");
  verify->add_option("--suite", suite, "Suite id or all");
  verify->add_flag("--replay", replay, "Replay the first failing witness");
  format_opt(verify);
  quant.add_to(verify);

  auto* demo_cmd = app.add_subcommand("demo", "Print a built-in worked example");
  demo_cmd->add_option("name", demo, "example1, example1-pg, example2 or example-final")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      const auto L = load_lattice(lattice_arg);
      if (!L.has_ortho()) {
        out << "ok: lattice without orthocomplement (" << L.size() << " elements)\n";
        return 0;
      }
      const auto report = check_orthomodular(L);
      if (!report.failed()) {
        out << "ok: orthomodular\n";
        return 0;
      }
      return print_report(report, format, out);
    }
    if (eval->parsed()) {
      const auto L = load_lattice(lattice_arg);
      const auto f = load_frame(frame_arg);
      const auto ops = OperatorQuadruple::induced_by(f.relation());
      std::vector<TenseOperator> list;
      for (std::size_t pos = 0; pos <= words.size();) {
        const auto comma = std::min(words.find(',', pos), words.size());
        list.push_back(parse_operator_word(words.substr(pos, comma - pos), ops));
        pos = comma + 1;
      }
      const auto props = parse_propositions(read_text_file(prop_arg), L, f.points());
      for (std::size_t i = 0; i < props.size(); ++i) {
        if (i) out << "\n";
        out << render_table(operator_table(L, f.points(), props[i].name, props[i].value, list));
      }
      return 0;
    }
    if (sasaki->parsed()) {
      out << render_sasaki_tables(load_lattice(lattice_arg));
      return 0;
    }
    if (induce->parsed()) {
      const auto L = load_lattice(lattice_arg);
      const auto loaded = load_ops(ops_arg, L, frame_size);
      const auto q = quant.make();
      const auto report = relation == "r1"   ? induce_R1(L, loaded.ops.P, loaded.ops.F, q)
                          : relation == "r2" ? induce_R2(L, loaded.ops.H, loaded.ops.G, q)
                                             : induce_R3(L, loaded.ops, q);
      std::string name = relation;
      name[0] = 'R';
      out << format_relation(name, loaded.points, report.relation);
      describe_excluded(L, loaded.points, report, out);
      return 0;
    }
    if (classify->parsed()) {
      const auto L = load_lattice(lattice_arg);
      const auto loaded = load_ops(ops_arg, L, frame_size);
      const auto verdict = classify_inducibility(L, loaded.ops, quant.make());
      if (verdict.frame_induced) {
        out << "frame-induced by\n" << format_relation("R3", loaded.points, verdict.relation);
      } else {
        const auto& w = *verdict.witness;
        const std::string k(1, to_char(w.op));
        const auto& s = loaded.points.name(w.s);
        out << "not frame-inducible: q = " << format_values(L, w.q) << ", " << k << "*(q)(" << s
            << ") = " << L.element_name(w.induced) << ", " << k << "(q)(" << s << ") = " << L.element_name(w.given)
            << "\n";
      }
      return 0;
    }
    if (roundtrip->parsed()) {
      const auto L = load_lattice(lattice_arg);
      return print_report(roundtrip_frame(L, load_frame(frame_arg), quant.make()), format, out);
    }
    if (extend->parsed()) {
      const auto L = load_lattice(lattice_arg);
      const auto f = load_frame(frame_arg);
      const auto ops = OperatorQuadruple::induced_by(f.relation());
      const bool pf = mode == "pf";
      const auto& A = pf ? ops.P : ops.H;
      const auto& B = pf ? ops.F : ops.G;
      const auto induced = pf ? induce_R1(L, A, B, quant.make()) : induce_R2(L, A, B, quant.make());
      const auto ef = extend_relation(f.points(), induced.relation, f.name() + "bar");
      const auto Abar = TenseOperator::frame_induced(ef.bar, pf ? TenseKind::P : TenseKind::H);
      const auto Bbar = TenseOperator::frame_induced(ef.bar, pf ? TenseKind::F : TenseKind::G);
      const auto props = parse_propositions(read_text_file(prop_arg), L, f.points());
      out << format_relation(ef.bar.name(), ef.bar.points(), ef.bar.relation());
      const std::size_t n = f.size();
      for (const auto& [name, q] : props) {
        Table table;
        table.corner = "tbar";
        table.columns = ef.bar.points().names();
        const auto middle = [&](std::string label, const Proposition& v) {
          TableRow row{std::move(label), std::vector<std::string>(3 * n)};
          for (std::size_t t = 0; t < n; ++t) row.cells[n + t] = L.element_name(v[t]);
          return row;
        };
        const std::string a(1, pf ? 'P' : 'H'), b(1, pf ? 'F' : 'G');
        const auto qbar = pf ? extend_prop_PF(L, q, A, B, ef) : extend_prop_HG(L, q, A, B, ef);
        table.rows.push_back(middle(name + "(t)", q));
        table.rows.push_back(middle(a + "(" + name + ")(t)", A.apply(L, q)));
        table.rows.push_back(middle(b + "(" + name + ")(t)", B.apply(L, q)));
        table.rows.push_back(value_row(L, name + "bar(tbar)", qbar));
        table.rows.push_back(value_row(L, a + "bar(" + name + "bar)(tbar)", Abar.apply(L, qbar)));
        table.rows.push_back(value_row(L, b + "bar(" + name + "bar)(tbar)", Bbar.apply(L, qbar)));
        out << "\n" << render_table(table);
      }
      return 0;
    }
    if (verify->parsed()) {
      const auto L = load_lattice(lattice_arg);
      std::vector<SuiteId> suites;
      if (suite == "all") {
        suites.assign(kAllSuites.begin(), kAllSuites.end());
      } else if (auto id = parse_suite(suite)) {
        suites.push_back(*id);
      } else {
        err << "error: unknown suite '" << suite << "'\n";
        return 2;
      }
      SuiteInstance in;
      if (!frame_arg.empty()) {
        in = SuiteInstance::of_frame(load_frame(frame_arg));
      } else if (!ops_arg.empty()) {
        auto loaded = load_ops(ops_arg, L, frame_size);
        in = SuiteInstance::of_ops(loaded.points, loaded.ops);
      } else {
        in.points = TimeSet::numbered(frame_size.value_or(1));
      }
      if (!extra_arg.empty()) {
        const auto extra = load_ops(extra_arg, L, in.points.size());
        for (auto k : kAllTenses) {
          in.extra.push_back(extra.ops[k].relabeled(extra.ops[k].label() + "[" + extra.name + "]"));
        }
      }
      in.quant = quant.make();
      int code = 0;
      for (auto id : suites) {
        const auto report = run_suite(id, L, in);
        code = std::max(code, print_report(report, format, out));
        if (replay && report.failed()) {
          for (const auto& line : replay_witness(L, report)) out << "  " << line << "\n";
        }
      }
      return code;
    }
    if (demo_cmd->parsed()) {
      out << render_demo(demo);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace omt::cli
