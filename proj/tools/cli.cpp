#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "spgame/census.hpp"
#include "spgame/constructions.hpp"
#include "spgame/impartial.hpp"
#include "spgame/rulesets.hpp"
#include "spgame/values.hpp"
#include "spgame/verify.hpp"

namespace spg::cli {

namespace {

/// Bad input detected after argument parsing.
struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string file;
  bool impartial = false;
  bool outcome = false;
  bool birthdays = false;
  bool pretty = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const std::string text = read_input(a.file);
  GameContext ctx;
  if (a.impartial) {
    const ImpartialComplex c = ImpartialComplex::parse(text);
    const int g = grundy(c);
    const GameId nim = make_nimber(ctx, g);
    out << "value: *" << g << '\n';
    out << "canonical: " << (a.pretty ? to_pretty_bracket(ctx, nim) : ctx.to_bracket(nim)) << '\n';
    if (a.outcome) out << "outcome: " << (g == 0 ? "P" : "N") << '\n';
    if (a.birthdays) {
      out << "formal birthday: " << c.complex().dimension() + 1 << '\n';
      out << "birthday: " << ctx.birthday(nim) << '\n';
    }
    return kOk;
  }
  const Complex c = Complex::parse(text);
  const GameId g = ctx.evaluate(c);
  out << "value: " << render_value(recognize(ctx, g), RenderStyle::Machine) << '\n';
  out << "canonical: " << (a.pretty ? to_pretty_bracket(ctx, g) : ctx.to_bracket(g)) << '\n';
  if (a.outcome) out << "outcome: " << to_string(ctx.outcome(g)) << '\n';
  if (a.birthdays) {
    out << "formal birthday: " << ctx.formal_birthday(ctx.from_complex(c)) << '\n';
    out << "birthday: " << ctx.birthday(g) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_construct(const std::string& kind, const std::vector<std::string>& params, bool connected,
                  std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw UsageError("construct " + kind + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto p = [&](std::size_t i) { return parse_int(params[i], "parameter"); };
  if (connected && kind != "switch-sym") throw UsageError("--connected applies to switch-sym only");
  Complex c;
  if (kind == "integer-simplex") {
    need(2);
    c = integer_simplex(p(0), p(1));
  } else if (kind == "integer-at-dim") {
    need(2);
    c = integer_at_dimension(p(0), p(1));
  } else if (kind == "fraction") {
    need(1);
    c = fraction_complex(p(0));
  } else if (kind == "dyadic") {
    need(2);
    c = dyadic_complex(p(0), p(1));
  } else if (kind == "switch-sym") {
    need(2);
    c = switch_symmetric(p(0), p(1), connected);
  } else if (kind == "switch") {
    need(2);
    c = switch_general(p(0), p(1));
  } else if (kind == "tiny") {
    need(1);
    c = tiny_complex(p(0));
  } else if (kind == "nim") {
    need(1);
    c = nim_pile_complex(p(0));
  } else if (kind == "catalog") {
    need(1);
    if (params[0] != "birthday2") throw UsageError("unknown catalog '" + params[0] + "'");
    bool first = true;
    for (const auto& e : birthday2_catalog()) {
      if (!first) out << '\n';
      first = false;
      out << "# " << e.name << ": " << (e.negated ? "-(" + e.expected + ")" : e.expected) << '\n';
      out << e.complex.serialize();
    }
    return kOk;
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  out << c.serialize();
  return kOk;
}

int cmd_ruleset(const std::string& rules, const std::string& board_spec, std::ostream& out) {
  const Board board = Board::parse_spec(board_spec);
  Complex c;
  if (rules == "snort") {
    c = snort_complex(board);
  } else if (rules == "col") {
    c = col_complex(board);
  } else if (rules == "domineering") {
    c = domineering_complex(board);
  } else if (rules == "nim") {
    const int n = board.vertex_count();
    const auto edges = board.edges();
    if (board.kind() != Board::Kind::Graph || static_cast<int>(edges.size()) != n * (n - 1) / 2)
      throw UsageError("nim is played on a complete graph board, e.g. complete:3");
    c = nim_pile_complex(n);
  } else {
    throw UsageError("unknown ruleset '" + rules + "'");
  }
  out << c.serialize();
  return kOk;
}

// ---------------------------------------------------------------------------

struct CensusArgs {
  int max_vertices = 0;
  int max_dim = 0;
  int min_dim = -1;
  int workers = 1;
  std::vector<std::string> assert_absent;
};

std::string complex_inline(const Complex& c) {
  std::string s;
  for (const Face& f : c.facets()) {
    if (!s.empty()) s += " / ";
    if (f.empty()) s += "()";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + c.vertex(f[i]).name;
  }
  return s.empty() ? "(empty)" : s;
}

int cmd_census(const CensusArgs& a, std::ostream& out, std::ostream& err) {
  CensusOptions opt;
  opt.max_vertices = a.max_vertices;
  opt.max_dim = a.max_dim;
  opt.min_dim = a.min_dim;
  opt.workers = a.workers;
  try {
    check_census_bounds(opt);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  // resolve assertions before the run so a bad expression fails fast
  GameContext ctx;
  std::vector<std::pair<std::string, std::string>> absent;
  for (const auto& expr : a.assert_absent)
    absent.emplace_back(expr, render_value(recognize(ctx, parse_game(ctx, expr)), RenderStyle::Machine));

  const CensusReport r = run_census(opt);
  out << "census: vertices <= " << a.max_vertices << ", dimension " << a.min_dim << ".." << a.max_dim << '\n';
  out << "classes: " << r.classes << '\n';
  out << "values: " << r.values.size() << '\n';
  for (const auto& [value, s] : r.values) {
    out << value << "\tcount=" << s.count << "\tdims=";
    for (std::size_t i = 0; i < s.dimensions.size(); ++i) out << (i ? "," : "") << s.dimensions[i];
    out << "\twitness: " << complex_inline(s.witness) << '\n';
  }
  err << "census time: " << std::fixed << std::setprecision(3) << r.seconds << "s\n";
  int status = kOk;
  for (const auto& [expr, value] : absent) {
    const bool found = r.values.contains(value);
    out << "assert-absent " << expr << ": " << (found ? "FOUND" : "ok") << '\n';
    if (found) status = kCheckFailed;
  }
  return status;
}

int cmd_grundy(const std::string& file, bool impartial, bool explain, std::ostream& out) {
  const std::string text = read_input(file);
  const ImpartialComplex c = impartial ? ImpartialComplex::parse(text) : ImpartialComplex(Complex::parse(text));
  const int g = grundy(c);
  out << '*' << g << '\n';
  if (explain) {
    if (auto p = predict_structural(c))
      out << "predicted *" << p->grundy << " by rule: " << to_string(p->rule) << '\n';
    else
      out << "no structural rule applies\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string fixtures;
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;
  bool no_domination = false;
  bool no_reversibility = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.engine.remove_dominated = !a.no_domination;
  opt.engine.bypass_reversible = !a.no_reversibility;
  std::vector<CheckResult> results;
  if (!a.fixtures.empty()) {
    try {
      results = run_fixture_checks(a.fixtures, opt.engine);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  for (auto& r : run_regression_checks(opt)) results.push_back(std::move(r));
  out << format_report(results, a.timings);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
  return ok ? kOk : kCheckFailed;
}

int cmd_sp_check(const std::string& target, std::ostream& out) {
  GameContext ctx;
  GameId g;
  std::error_code ec;
  if (std::filesystem::is_regular_file(target, ec) || target == "-")
    g = ctx.from_complex(Complex::parse(read_input(target)));
  else
    g = parse_game(ctx, target);
  const bool ok = ctx.sp_tree_check(g);
  out << "sp-tree check: " << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong placement games: legal complexes and game values", "spgame"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a complex file ('-' for stdin)");
  eval_cmd->add_option("file", eval.file, "complex file")->required();
  eval_cmd->add_flag("--impartial", eval.impartial, "any vertex names; report the Grundy value");
  eval_cmd->add_flag("--outcome", eval.outcome, "print the outcome class");
  eval_cmd->add_flag("--birthdays", eval.birthdays, "print formal birthday and birthday");
  eval_cmd->add_flag("--pretty", eval.pretty, "name numbers and nimbers inside the canonical form");

  std::string kind;
  std::vector<std::string> params;
  bool connected = false;
  auto* construct_cmd = app.add_subcommand("construct", "Print a construction complex");
  construct_cmd
      ->add_option("kind", kind,
                   "integer-simplex m n | integer-at-dim n k | fraction q | dyadic p q | switch-sym a b | "
                   "switch a b | tiny n | catalog birthday2 | nim n")
      ->required();
  construct_cmd->add_option("params", params, "integer parameters")->allow_extra_args();
  construct_cmd->add_flag("--connected", connected, "switch-sym: add the face {x0,y0}");

  std::string rules, board;
  auto* ruleset_cmd = app.add_subcommand("ruleset", "Print the legal complex of a ruleset on a board");
  ruleset_cmd->add_option("rules", rules, "snort | col | domineering | nim")->required();
  ruleset_cmd->add_option("--board", board, "path:<n> | cycle:<n> | complete:<n> | grid:<r>x<c>[:mask=r,c;...] | graph:<file>")
      ->required();

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Enumerate small complexes and report their values");
  census_cmd->add_option("--max-vertices", census.max_vertices)->required();
  census_cmd->add_option("--max-dim", census.max_dim)->required();
  census_cmd->add_option("--min-dim", census.min_dim, "skip complexes of smaller dimension");
  census_cmd->add_option("--assert-absent", census.assert_absent, "fail if this value occurs");
  census_cmd->add_option("--workers", census.workers)->check(CLI::Range(1, 256));

  std::string grundy_file;
  bool grundy_impartial = false, explain = false;
  auto* grundy_cmd = app.add_subcommand("grundy", "Grundy value of an impartial complex");
  grundy_cmd->add_option("file", grundy_file)->required();
  grundy_cmd->add_flag("--impartial", grundy_impartial, "any vertex names (otherwise x/y names, labels dropped)");
  grundy_cmd->add_flag("--explain", explain, "report the structural rule that predicts the value");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the regression suite");
  verify_cmd->add_option("--fixtures", verify.fixtures, "directory of .cx fixtures to run first");
  verify_cmd->add_option("--seed", verify.seed, "seed for the property suites");
  verify_cmd->add_flag("--timings", verify.timings, "show run times");
  verify_cmd->add_flag("--no-domination", verify.no_domination, "fault injection: keep dominated options");
  verify_cmd->add_flag("--no-reversibility", verify.no_reversibility, "fault injection: keep reversible options");

  std::string sp_target;
  auto* sp_cmd = app.add_subcommand("sp-check", "Commutation check on a complex file or game expression");
  sp_cmd->add_option("target", sp_target)->required();

  std::vector<const char*> argv{"spgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*construct_cmd) return cmd_construct(kind, params, connected, out);
    if (*ruleset_cmd) return cmd_ruleset(rules, board, out);
    if (*census_cmd) return cmd_census(census, out, err);
    if (*grundy_cmd) return cmd_grundy(grundy_file, grundy_impartial, explain, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*sp_cmd) return cmd_sp_check(sp_target, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace spg::cli
