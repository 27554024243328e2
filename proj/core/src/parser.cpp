#include "holoconn/parser.hpp"

#include <cctype>
#include <string>

#include "holoconn/errors.hpp"

namespace holoconn {

namespace {

struct Token {
  enum Kind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line, column;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line0, int col0)
      : src_(src), line_(line0), col_(col0) {}

  Token next() {
    skip_ws();
    int l = line_, c = col_;
    if (pos_ >= src_.size()) return {Token::End, "", l, c};
    char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string n;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        n += advance();
      return {Token::Integer, n, l, c};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string n;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        n += advance();
      return {Token::Ident, n, l, c};
    }
    advance();
    switch (ch) {
      case '+': return {Token::Plus, "+", l, c};
      case '-': return {Token::Minus, "-", l, c};
      case '*': return {Token::Star, "*", l, c};
      case '/': return {Token::Slash, "/", l, c};
      case '^': return {Token::Caret, "^", l, c};
      case '(': return {Token::LParen, "(", l, c};
      case ')': return {Token::RParen, ")", l, c};
      default:
        throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
    }
  }

 private:
  char advance() {
    char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_, col_;
};

class Parser {
 public:
  Parser(std::string_view src, const Chart& chart, int line0, int col0)
      : lexer_(src, line0, col0), chart_(chart) {
    shift();
  }

  Expr parse() {
    Expr e = expression();
    expect(Token::End, "end of expression");
    return e;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k)
      throw SyntaxError("expected " + what, tok_.line, tok_.column);
  }

  Expr expression() {
    Expr e = term();
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool plus = tok_.kind == Token::Plus;
      shift();
      Expr rhs = term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
      bool mul = tok_.kind == Token::Star;
      Token op = tok_;
      shift();
      Expr rhs = factor();
      if (mul) {
        e = e * rhs;
      } else {
        if (rhs.is_zero())
          throw SyntaxError("division by zero", op.line, op.column);
        e = e / rhs;
      }
    }
    return e;
  }

  Expr factor() {
    if (tok_.kind == Token::Minus) {
      shift();
      return -factor();
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    while (tok_.kind == Token::Caret) {
      shift();
      if (tok_.kind == Token::Minus)
        throw SyntaxError("negative exponent outside grammar", tok_.line,
                          tok_.column);
      expect(Token::Integer, "non-negative integer exponent");
      if (tok_.text.size() > 4)
        throw SyntaxError("exponent too large", tok_.line, tok_.column);
      unsigned e = static_cast<unsigned>(std::stoul(tok_.text));
      shift();
      base = base.pow(e);
    }
    return base;
  }

  Expr atom() {
    switch (tok_.kind) {
      case Token::Integer: {
        mpq_class v(tok_.text);
        shift();
        return Expr(Scalar(std::move(v)));
      }
      case Token::Ident: {
        std::string name = tok_.text;
        if (name == "i") {
          shift();
          return Expr(Scalar::i());
        }
        if (name == chart_.v1) {
          shift();
          return Expr::variable(1);
        }
        if (name == chart_.v2) {
          shift();
          return Expr::variable(2);
        }
        throw UnknownVariable("unknown variable '" + name + "'", tok_.line,
                              tok_.column);
      }
      case Token::LParen: {
        shift();
        Expr e = expression();
        expect(Token::RParen, "')'");
        shift();
        return e;
      }
      default:
        throw SyntaxError("expected integer, 'i', variable or '('", tok_.line,
                          tok_.column);
    }
  }

  Lexer lexer_;
  Chart chart_;
  Token tok_;
};

}  // namespace

Expr parse_expression(std::string_view text, const Chart& chart, int line0,
                      int col0) {
  return Parser(text, chart, line0, col0).parse();
}

Scalar parse_scalar(std::string_view text, const Chart& chart, int line0,
                    int col0) {
  Expr e = parse_expression(text, chart, line0, col0);
  if (!e.is_constant())
    throw ArityError("expected a constant expression, got '" +
                     std::string(text) + "'");
  return e.constant_value();
}

}  // namespace holoconn
