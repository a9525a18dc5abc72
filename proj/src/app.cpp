#include "grossone/app.hpp"

#include "grossone/error.hpp"
#include "grossone/evaluator.hpp"
#include "grossone/expr.hpp"
#include "grossone/fractal.hpp"
#include "grossone/json.hpp"
#include "grossone/process.hpp"
#include "grossone/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <unistd.h>

namespace grossone {

namespace {

constexpr const char* kGrammarHelp =
    "Expressions: rationals (3, 8/9, 0.125), the grossone symbol (① or g1),\n"
    "+ - * / ^ and parentheses. ^ is right-associative and binds tighter than\n"
    "unary minus, which binds tighter than * and /: -g1^2 = -(g1^2),\n"
    "8/9^g1 = 8/(9^g1), 2^3^2 = 2^9.\n"
    "Functions: carpet(k,n) sponge(k,n) cantor(k,n) (total measure), reach(s),\n"
    "approx(e,m), countable(e), compare(a,b).\n";

constexpr const char* kReplHelp =
    "Commands:\n"
    "  compare A B                    order of two values\n"
    "  approx E at M                  exact value with ① := M\n"
    "  carpet K N | sponge K N | cantor K N\n"
    "                                 snapshot at offset K, step N\n"
    "  distinguish F1 K1 N1 F2 K2 N2  compare two snapshots' measures\n"
    "  reach S                        farthest element reachable from S\n"
    "  countable E                    whether E elements can be counted one by one\n"
    "  E                              evaluate an expression\n"
    "  help, quit\n";

std::optional<Fractal> fractal_named(std::string_view name) {
  if (name == "carpet") return Fractal::Carpet;
  if (name == "sponge") return Fractal::Sponge;
  if (name == "cantor") return Fractal::Cantor;
  return std::nullopt;
}

/// Display column of a byte offset in UTF-8 text.
std::size_t column_of(std::string_view line, std::size_t offset) {
  std::size_t col = 0;
  for (std::size_t i = 0; i < std::min(offset, line.size()); ++i) {
    if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
  }
  return col;
}

std::string caret_block(std::string_view line, std::size_t begin, std::size_t end) {
  const std::size_t from = column_of(line, begin);
  const std::size_t to = std::max(column_of(line, end), from + 1);
  std::string out = "\n  ";
  for (char c : line) out += (c == '\n' || c == '\r') ? ' ' : c;
  out += "\n  " + std::string(from, ' ') + "^" + std::string(to - from - 1, '~');
  return out;
}

CommandOutcome render_error(std::string_view line, const SyntaxError& e,
                            const OutputOptions& opts) {
  if (opts.json) {
    nlohmann::json j = {{"error",
                         {{"kind", "SyntaxError"},
                          {"offset", e.offset()},
                          {"expected", e.expected()},
                          {"found", e.found()},
                          {"message", e.what()}}}};
    return {kSyntaxError, j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)};
  }
  return {kSyntaxError,
          std::string("error: ") + e.what() + caret_block(line, e.offset(), e.offset() + 1)};
}

CommandOutcome render_error(std::string_view line, const ArithmeticError& e,
                            const OutputOptions& opts) {
  if (opts.json) {
    nlohmann::json j = {{"kind", to_string(e.kind())}, {"message", e.detail()}};
    if (e.span()) j["span"] = {{"begin", e.span()->begin}, {"end", e.span()->end}};
    return {kArithmeticError,
            nlohmann::json{{"error", j}}.dump(-1, ' ', false,
                                               nlohmann::json::error_handler_t::replace)};
  }
  std::string text = std::string("error: ") + e.what();
  if (e.span()) text += caret_block(line, e.span()->begin, e.span()->end);
  return {kArithmeticError, text};
}

std::string render(const GrossValue& v, const OutputOptions& opts) {
  return opts.json ? to_json(v, opts.format).dump() : v.to_string(opts.format);
}

std::string render(const Rational& r, const OutputOptions& opts) {
  if (opts.json) return nlohmann::json{{"value", to_json(r)}, {"text", to_string(r)}}.dump();
  return to_string(r);
}

std::string render(std::strong_ordering ord, const OutputOptions& opts) {
  return opts.json ? nlohmann::json{{"ordering", to_string(ord)}}.dump() : to_string(ord);
}

std::string render(bool b, const OutputOptions& opts) {
  if (opts.json) return nlohmann::json{{"countable", b}}.dump();
  return b ? "true" : "false";
}

std::string render(const FractalSnapshot& s, const OutputOptions& opts) {
  const auto& f = opts.format;
  if (opts.json) {
    return nlohmann::json{{"fractal", to_string(s.fractal)},
                          {"k", to_json(s.offset_k, f)},
                          {"n", to_json(s.step_n, f)},
                          {"count", to_json(s.piece_count, f)},
                          {"size", to_json(s.piece_size, f)},
                          {"measure", to_json(s.total_measure, f)}}
        .dump();
  }
  return std::string(to_string(s.fractal)) + "(k=" + s.offset_k.to_string(f) +
         ", n=" + s.step_n.to_string(f) + "): count=" + s.piece_count.to_string(f) +
         " size=" + s.piece_size.to_string(f) + " measure=" + s.total_measure.to_string(f);
}

/// Evaluates the next argument of a command; errors without a span get the
/// argument's span.
struct ArgReader {
  Parser& parser;

  ExprPtr expr() {
    parser.accept_comma();
    return parser.parse_expression();
  }
  GrossValue value() { return eval(*expr()); }
  GrossValue eval(const Expr& e) {
    try {
      return evaluate(e);
    } catch (const ArithmeticError& err) {
      if (err.span()) throw;
      throw err.with_span(e.span);
    }
  }
  GrossLinear linear(const char* what) {
    ExprPtr e = expr();
    GrossValue v = eval(*e);
    try {
      return require_linear(v, what);
    } catch (const ArithmeticError& err) {
      throw err.with_span(e->span);
    }
  }
  Fractal fractal() {
    parser.accept_comma();
    for (Fractal f : {Fractal::Carpet, Fractal::Sponge, Fractal::Cantor}) {
      if (parser.accept_word(to_string(f))) return f;
    }
    throw SyntaxError(parser.offset(), {"carpet", "sponge", "cantor"}, "another token");
  }
};

template <class Fn>
auto spanned(SourceSpan span, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ArithmeticError& err) {
    if (err.span()) throw;
    throw err.with_span(span);
  }
}

/// Leading command word, if the line starts with one that is not a call.
std::string_view command_word(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  std::size_t j = i;
  while (j < line.size() && std::islower(static_cast<unsigned char>(line[j]))) ++j;
  // "word(" is a call; the command form needs whitespace after the word.
  if (j == i || j == line.size() || !std::isspace(static_cast<unsigned char>(line[j]))) return {};
  static constexpr std::string_view kWords[] = {"compare", "approx", "carpet",
                                                "sponge",  "cantor", "reach",
                                                "countable", "distinguish"};
  std::string_view word = line.substr(i, j - i);
  for (auto w : kWords) {
    if (w == word) return w;
  }
  return {};
}

std::string run(std::string_view line, const OutputOptions& opts) {
  Parser parser(line);
  ArgReader args{parser};
  const SourceSpan whole{0, line.size()};
  const std::string_view word = command_word(line);
  if (!word.empty()) parser.accept_word(word);
  std::string result;

  if (word.empty()) {
    ExprPtr e = parser.parse_expression();
    parser.expect_end({"operator", "end of input"});
    EvalResult r = evaluate_top(*e);
    if (auto* v = std::get_if<GrossValue>(&r)) return render(*v, opts);
    if (auto* b = std::get_if<bool>(&r)) return render(*b, opts);
    return render(std::get<Ordering>(r).value, opts);
  }
  if (word == "compare") {
    GrossValue a = args.value();
    GrossValue b = args.value();
    parser.expect_end();
    return render(value_compare(a, b), opts);
  }
  if (word == "approx") {
    GrossValue v = args.value();
    if (!parser.accept_word("at")) {
      throw SyntaxError(parser.offset(), {"'at'", "operator"}, "another token");
    }
    ExprPtr at = args.expr();
    parser.expect_end();
    GrossValue m = args.eval(*at);
    if (!m.is_finite() || !is_integer(m.poly().finite_value())) {
      throw ArithmeticError(ErrorKind::InvalidSubstitution,
                            "substitution point must be a finite integer, got " + m.to_string(),
                            at->span);
    }
    return render(spanned(whole, [&] { return value_eval_at(v, m.poly().finite_value().get_num()); }),
                  opts);
  }
  if (auto f = fractal_named(word)) {
    GrossLinear k = args.linear("k");
    GrossLinear n = args.linear("n");
    parser.expect_end();
    return render(spanned(whole, [&] { return snapshot(*f, k, n); }), opts);
  }
  if (word == "distinguish") {
    Fractal fa = args.fractal();
    GrossLinear ka = args.linear("k");
    GrossLinear na = args.linear("n");
    Fractal fb = args.fractal();
    GrossLinear kb = args.linear("k");
    GrossLinear nb = args.linear("n");
    parser.expect_end();
    Distinction d = spanned(whole, [&] {
      return distinguish(snapshot(fa, ka, na), snapshot(fb, kb, nb));
    });
    if (opts.json) {
      return nlohmann::json{{"ordering", to_string(d.ordering)},
                            {"ratio", to_json(d.ratio, opts.format)}}
          .dump();
    }
    return std::string(to_string(d.ordering)) + " " + d.ratio.to_string(opts.format);
  }
  if (word == "reach") {
    GrossLinear s = args.linear("start");
    parser.expect_end();
    return render(GrossValue(GrossPolynomial(spanned(whole, [&] { return sequential_reach(s); }))),
                  opts);
  }
  // countable
  GrossValue c = args.value();
  parser.expect_end();
  return render(spanned(whole, [&] { return is_sequentially_countable(c); }), opts);
}

}  // namespace

CommandOutcome execute_command(std::string_view line, const OutputOptions& opts) {
  try {
    return {kOk, run(line, opts)};
  } catch (const SyntaxError& e) {
    return render_error(line, e, opts);
  } catch (const ArithmeticError& e) {
    return render_error(line, e, opts);
  } catch (const std::exception& e) {
    return render_error(line, ArithmeticError(ErrorKind::Unrepresentable, e.what()), opts);
  }
}

std::vector<CommandOutcome> execute_batch(const std::vector<std::string>& lines,
                                          const OutputOptions& opts) {
  std::vector<CommandOutcome> out(lines.size());
  for_each_index(lines.size(), [&](std::size_t i) { out[i] = execute_command(lines[i], opts); });
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

void run_repl(std::istream& in, std::ostream& out, const OutputOptions& opts, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    std::string_view cmd = trim(line);
    if (cmd.empty()) continue;
    if (cmd == "quit" || cmd == "exit") break;
    if (cmd == "help") {
      out << kReplHelp << kGrammarHelp;
      continue;
    }
    out << execute_command(cmd, opts).text << '\n';
  }
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact arithmetic with grossone: infinite and infinitesimal numbers,\n"
               "fractal measures at finite and infinite steps.\n\n" +
                   std::string(kGrammarHelp),
               "grosscalc"};
  app.require_subcommand(1);
  OutputOptions opts;
  bool ascii = false;
  app.add_flag("--json", opts.json, "Print JSON instead of canonical text");
  app.add_flag("--ascii", ascii, "Print g1 instead of ① (also GROSSCALC_ASCII=1)");

  std::string expr, second, at, fractal_a, fractal_b, k_a, n_a, k_b, n_b;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr)->required();
  auto* compare = app.add_subcommand("compare", "Compare two expressions");
  compare->add_option("e1", expr)->required();
  compare->add_option("e2", second)->required();
  auto* approx = app.add_subcommand("approx", "Exact value with ① replaced by an integer");
  approx->add_option("expr", expr)->required();
  approx->add_option("--at", at, "Integer substituted for ①")->required();
  std::vector<CLI::App*> fractal_cmds;
  for (const char* name : {"carpet", "sponge", "cantor"}) {
    auto* cmd = app.add_subcommand(name, std::string("Snapshot of the ") + name +
                                             " at offset k and step n");
    cmd->add_option("k", k_a)->required();
    cmd->add_option("n", n_a)->required();
    fractal_cmds.push_back(cmd);
  }
  auto* reach = app.add_subcommand("reach", "Farthest element reachable in ① steps");
  reach->add_option("start", expr)->required();
  auto* countable = app.add_subcommand("countable", "Whether a count fits in ① steps");
  countable->add_option("count", expr)->required();
  auto* distinguish = app.add_subcommand("distinguish", "Compare the measures of two snapshots");
  distinguish->add_option("fractal1", fractal_a)->required();
  distinguish->add_option("k1", k_a)->required();
  distinguish->add_option("n1", n_a)->required();
  distinguish->add_option("fractal2", fractal_b)->required();
  distinguish->add_option("k2", k_b)->required();
  distinguish->add_option("n2", n_b)->required();
  auto* repl = app.add_subcommand("repl", "Interactive session");
  auto* batch = app.add_subcommand("batch", "Run REPL commands from stdin, one per line");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSyntaxError;
  }

  if (const char* env = std::getenv("GROSSCALC_ASCII"); env && std::string_view(env) == "1") {
    ascii = true;
  }
  opts.format.ascii = ascii;

  if (*repl) {
    run_repl(in, out, opts, &in == &std::cin && isatty(STDIN_FILENO));
    return kOk;
  }
  if (*batch) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
      if (!trim(line).empty()) lines.emplace_back(trim(line));
    }
    int status = kOk;
    for (const auto& outcome : execute_batch(lines, opts)) {
      out << outcome.text << '\n';
      status = std::max(status, static_cast<int>(outcome.status));
    }
    return status;
  }

  std::string line;
  if (*eval) line = expr;
  if (*compare) line = "compare " + expr + " , " + second;
  if (*approx) line = "approx " + expr + " at " + at;
  for (auto* cmd : fractal_cmds) {
    if (*cmd) line = cmd->get_name() + " " + k_a + " , " + n_a;
  }
  if (*reach) line = "reach " + expr;
  if (*countable) line = "countable " + expr;
  if (*distinguish) {
    line = "distinguish " + fractal_a + " " + k_a + " , " + n_a + " " + fractal_b + " " + k_b +
           " , " + n_b;
  }
  // A bare expression that starts with a command word stays an expression.
  if (*eval && !command_word(line).empty()) line = "(" + expr + ")";

  CommandOutcome outcome = execute_command(line, opts);
  (outcome.status == kOk ? out : err) << outcome.text << '\n';
  return outcome.status;
}

}  // namespace grossone
