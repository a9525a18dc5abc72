#include "grossone/evaluator.hpp"

#include "grossone/error.hpp"
#include "grossone/process.hpp"

#include <optional>

namespace grossone {

namespace {

GrossValue eval_call(const Expr& e);

template <class Fn>
auto tagged(const Expr& e, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ArithmeticError& err) {
    if (err.span()) throw;
    throw err.with_span(e.span);
  }
}

void require_arity(const Expr& e, std::size_t n) {
  if (e.args.size() != n) {
    throw ArithmeticError(ErrorKind::ArityMismatch,
                          e.name + " takes " + std::to_string(n) + " argument(s), got " +
                              std::to_string(e.args.size()),
                          e.span);
  }
}

std::optional<Fractal> fractal_named(const std::string& name) {
  if (name == "carpet") return Fractal::Carpet;
  if (name == "sponge") return Fractal::Sponge;
  if (name == "cantor") return Fractal::Cantor;
  return std::nullopt;
}

BigInt require_substitution(const GrossValue& v, const Expr& where) {
  if (!v.is_finite() || !is_integer(v.poly().finite_value())) {
    throw ArithmeticError(ErrorKind::InvalidSubstitution,
                          "substitution point must be a finite integer, got " + v.to_string(),
                          where.span);
  }
  return v.poly().finite_value().get_num();
}

GrossValue eval_node(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Literal: return GrossValue(e.literal);
    case K::Grossone: return GrossValue(GrossPolynomial::grossone());
    case K::Call: return eval_call(e);
    case K::Negate: {
      GrossValue v = evaluate(*e.args[0]);
      return tagged(e, [&] { return value_neg(v); });
    }
    default: break;
  }
  GrossValue lhs = evaluate(*e.args[0]);
  GrossValue rhs = evaluate(*e.args[1]);
  return tagged(e, [&] {
    switch (e.kind) {
      case K::Add: return value_add(lhs, rhs);
      case K::Sub: return value_sub(lhs, rhs);
      case K::Mul: return value_mul(lhs, rhs);
      case K::Div: return value_div(lhs, rhs);
      default: return value_pow(lhs, rhs);
    }
  });
}

GrossValue eval_call(const Expr& e) {
  if (auto f = fractal_named(e.name)) {
    require_arity(e, 2);
    GrossLinear k = tagged(*e.args[0], [&] { return require_linear(evaluate(*e.args[0]), "k"); });
    GrossLinear n = tagged(*e.args[1], [&] { return require_linear(evaluate(*e.args[1]), "n"); });
    return tagged(e, [&] { return snapshot(*f, k, n).total_measure; });
  }
  if (e.name == "reach") {
    require_arity(e, 1);
    GrossLinear s =
        tagged(*e.args[0], [&] { return require_linear(evaluate(*e.args[0]), "start"); });
    return tagged(e, [&] { return GrossValue(GrossPolynomial(sequential_reach(s))); });
  }
  if (e.name == "approx") {
    require_arity(e, 2);
    GrossValue v = evaluate(*e.args[0]);
    BigInt m = require_substitution(evaluate(*e.args[1]), *e.args[1]);
    return tagged(e, [&] { return GrossValue(value_eval_at(v, m)); });
  }
  if (e.name == "countable" || e.name == "compare") {
    throw ArithmeticError(ErrorKind::TypeMismatch,
                          e.name + "(...) does not yield a number; use it at the top level",
                          e.span);
  }
  throw ArithmeticError(ErrorKind::UnknownFunction, "unknown function '" + e.name + "'", e.span);
}

}  // namespace

GrossValue evaluate(const Expr& e) { return eval_node(e); }

EvalResult evaluate_top(const Expr& e) {
  if (e.kind == Expr::Kind::Call && e.name == "countable") {
    require_arity(e, 1);
    GrossValue v = evaluate(*e.args[0]);
    return tagged(e, [&] { return is_sequentially_countable(v); });
  }
  if (e.kind == Expr::Kind::Call && e.name == "compare") {
    require_arity(e, 2);
    GrossValue a = evaluate(*e.args[0]);
    GrossValue b = evaluate(*e.args[1]);
    return Ordering{value_compare(a, b)};
  }
  return evaluate(e);
}

GrossValue evaluate(std::string_view input) { return evaluate(*parse(input)); }

}  // namespace grossone
