#include "grossone/expr.hpp"

#include <cctype>

namespace grossone {

namespace {

constexpr std::string_view kGrossoneUtf8 = "\xE2\x91\xA0";  // ①
constexpr std::string_view kMinusUtf8 = "\xE2\x88\x92";     // −

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::Number: return "number '" + t.text + "'";
    case TokenKind::Grossone: return "grossone";
    case TokenKind::Ident: return "identifier '" + t.text + "'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::string describe_byte(unsigned char c) {
  if (std::isprint(c)) return std::string("character '") + static_cast<char>(c) + "'";
  static const char* hex = "0123456789ABCDEF";
  return std::string("byte 0x") + hex[c >> 4] + hex[c & 15];
}

ExprPtr make(Expr::Kind kind, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->span = span;
  return e;
}

ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = make(kind, {lhs->span.begin, rhs->span.end});
  e->args.push_back(std::move(lhs));
  e->args.push_back(std::move(rhs));
  return e;
}

// Binding powers. Unary minus sits between * / and ^.
constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnary = 30;
constexpr int kPower = 40;

int infix_power(TokenKind k) {
  switch (k) {
    case TokenKind::Plus:
    case TokenKind::Minus: return kAdditive;
    case TokenKind::Star:
    case TokenKind::Slash: return kMultiplicative;
    case TokenKind::Caret: return kPower;
    default: return -1;
  }
}

constexpr std::size_t kMaxTokens = 20'000;

const std::vector<std::string> kOperand = {"number", "grossone", "identifier", "'('", "'-'"};

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto single = [&](TokenKind kind, std::size_t len) {
    tokens.push_back({kind, {i, i + len}, std::string(input.substr(i, len))});
    i += len;
  };
  while (i < input.size()) {
    if (tokens.size() >= kMaxTokens) {
      throw SyntaxError(i, {"end of input"},
                        "more than " + std::to_string(kMaxTokens) + " tokens");
    }
    const auto c = static_cast<unsigned char>(input[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (input.substr(i, kGrossoneUtf8.size()) == kGrossoneUtf8) {
      single(TokenKind::Grossone, kGrossoneUtf8.size());
      continue;
    }
    if (input.substr(i, kMinusUtf8.size()) == kMinusUtf8) {
      single(TokenKind::Minus, kMinusUtf8.size());
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < input.size() &&
                            std::isdigit(static_cast<unsigned char>(input[i + 1])))) {
      std::size_t j = i;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      if (j < input.size() && input[j] == '.') {
        ++j;
        while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      }
      single(TokenKind::Number, j - i);
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < input.size() && is_ident_char(static_cast<unsigned char>(input[j]))) ++j;
      std::string_view word = input.substr(i, j - i);
      single(word == "g1" || word == "G1" ? TokenKind::Grossone : TokenKind::Ident, j - i);
      continue;
    }
    switch (c) {
      case '+': single(TokenKind::Plus, 1); continue;
      case '-': single(TokenKind::Minus, 1); continue;
      case '*': single(TokenKind::Star, 1); continue;
      case '/': single(TokenKind::Slash, 1); continue;
      case '^': single(TokenKind::Caret, 1); continue;
      case '(': single(TokenKind::LParen, 1); continue;
      case ')': single(TokenKind::RParen, 1); continue;
      case ',': single(TokenKind::Comma, 1); continue;
      default:
        throw SyntaxError(i, {"number", "grossone", "identifier", "operator"},
                          describe_byte(c));
    }
  }
  tokens.push_back({TokenKind::End, {input.size(), input.size()}, {}});
  return tokens;
}

Parser::Parser(std::string_view input) : tokens_(tokenize(input)) {}

bool Parser::at_end() const { return peek().kind == TokenKind::End; }

std::size_t Parser::offset() const { return peek().span.begin; }

bool Parser::accept_word(std::string_view word) {
  if (peek().kind == TokenKind::Ident && peek().text == word) {
    ++pos_;
    return true;
  }
  return false;
}

bool Parser::accept_comma() {
  if (peek().kind == TokenKind::Comma) {
    ++pos_;
    return true;
  }
  return false;
}

void Parser::expect_end(std::vector<std::string> expected) const {
  if (!at_end()) fail(std::move(expected));
}

void Parser::fail(std::vector<std::string> expected) const {
  throw SyntaxError(peek().span.begin, std::move(expected), describe(peek()));
}

ExprPtr Parser::parse_expression() { return parse_binary(0); }

ExprPtr Parser::parse_binary(int min_power) {
  if (++depth_ > kMaxDepth) {
    throw SyntaxError(peek().span.begin, {"shallower nesting"}, "nesting deeper than " +
                                                                   std::to_string(kMaxDepth));
  }
  struct Leave {
    int& depth;
    ~Leave() { --depth; }
  } leave{depth_};
  ExprPtr lhs = parse_prefix();
  while (true) {
    const TokenKind op = peek().kind;
    const int power = infix_power(op);
    if (power <= min_power) break;
    next();
    Expr::Kind kind{};
    ExprPtr rhs;
    switch (op) {
      case TokenKind::Plus: kind = Expr::Kind::Add; rhs = parse_binary(power); break;
      case TokenKind::Minus: kind = Expr::Kind::Sub; rhs = parse_binary(power); break;
      case TokenKind::Star: kind = Expr::Kind::Mul; rhs = parse_binary(power); break;
      case TokenKind::Slash: kind = Expr::Kind::Div; rhs = parse_binary(power); break;
      default:
        // Right-associative: a following ^ binds inside the exponent.
        kind = Expr::Kind::Pow;
        rhs = parse_binary(power - 1);
        break;
    }
    lhs = make_binary(kind, std::move(lhs), std::move(rhs));
  }
  return lhs;
}

ExprPtr Parser::parse_prefix() {
  if (peek().kind == TokenKind::Minus || peek().kind == TokenKind::Plus) {
    const Token sign = next();
    ExprPtr operand = parse_binary(kUnary);
    if (sign.kind == TokenKind::Plus) return operand;
    auto e = make(Expr::Kind::Negate, {sign.span.begin, operand->span.end});
    e->args.push_back(std::move(operand));
    return e;
  }
  return parse_primary();
}

ExprPtr Parser::parse_primary() {
  const Token& t = peek();
  switch (t.kind) {
    case TokenKind::Number: {
      Token tok = next();
      Rational value;
      if (!parse_rational(tok.text, value)) {
        throw SyntaxError(tok.span.begin, {"number"}, "malformed number '" + tok.text + "'");
      }
      auto e = make(Expr::Kind::Literal, tok.span);
      e->literal = value;
      return e;
    }
    case TokenKind::Grossone: return make(Expr::Kind::Grossone, next().span);
    case TokenKind::LParen: {
      const Token open = next();
      ExprPtr inner = parse_binary(0);
      if (peek().kind != TokenKind::RParen) fail({"')'", "operator"});
      const Token close = next();
      inner->span = {open.span.begin, close.span.end};
      return inner;
    }
    case TokenKind::Ident: {
      const Token name = next();
      if (peek().kind != TokenKind::LParen) fail({"'(' after function name"});
      next();
      auto call = make(Expr::Kind::Call, name.span);
      call->name = name.text;
      if (peek().kind != TokenKind::RParen) {
        call->args.push_back(parse_binary(0));
        while (accept_comma()) call->args.push_back(parse_binary(0));
      }
      if (peek().kind != TokenKind::RParen) fail({"','", "')'"});
      call->span.end = next().span.end;
      return call;
    }
    default: break;
  }
  fail(kOperand);
}

ExprPtr parse(std::string_view input) {
  Parser parser(input);
  ExprPtr e = parser.parse_expression();
  parser.expect_end({"operator", "end of input"});
  return e;
}

}  // namespace grossone
