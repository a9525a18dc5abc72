#pragma once

#include "grossone/error.hpp"
#include "grossone/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace grossone {

enum class TokenKind { Number, Grossone, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind;
  SourceSpan span;
  std::string text;  // identifier name or numeric literal
};

/// Splits UTF-8 input into tokens. `①`, `g1` and `G1` lex as Grossone;
/// `−` (U+2212) lexes as Minus. Throws SyntaxError.
std::vector<Token> tokenize(std::string_view input);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { Literal, Grossone, Negate, Add, Sub, Mul, Div, Pow, Call };

  Kind kind;
  SourceSpan span;
  Rational literal;        // Literal
  std::string name;        // Call
  std::vector<ExprPtr> args;  // operands or call arguments
};

/// Pratt parser. Binding powers, loosest first:
///   + -   left-associative
///   * /   left-associative
///   unary -
///   ^     right-associative; its right operand may carry a unary minus
class Parser {
 public:
  explicit Parser(std::string_view input);

  /// Parses one expression; the parser can be resumed to read the next.
  ExprPtr parse_expression();

  bool at_end() const;
  /// Consumes a bare identifier equal to `word` if it is next.
  bool accept_word(std::string_view word);
  bool accept_comma();
  /// Throws SyntaxError unless all input is consumed.
  void expect_end(std::vector<std::string> expected = {"end of input"}) const;
  std::size_t offset() const;

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(std::vector<std::string> expected) const;

  ExprPtr parse_binary(int min_power);
  ExprPtr parse_prefix();
  ExprPtr parse_primary();

  static constexpr int kMaxDepth = 512;

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

/// Parses a complete expression; trailing tokens are a SyntaxError.
ExprPtr parse(std::string_view input);

}  // namespace grossone
