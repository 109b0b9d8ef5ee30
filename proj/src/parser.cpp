#include "cyclecert/parser.hpp"

#include <algorithm>
#include <cctype>

#include "cyclecert/error.hpp"

namespace cyclecert {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      char c = src_[pos_];
      int line = line_;
      int col = col_;
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::string text;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
          text += src_[pos_];
          advance();
        }
        out.push_back({Tok::Number, text, line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string text;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          text += src_[pos_];
          advance();
        }
        out.push_back({Tok::Name, text, line, col});
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '/': kind = Tok::Slash; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          default:
            throw Error(ErrorKind::ParseError, "unexpected character '" + std::string(1, c) + "' at line " +
                                                   std::to_string(line) + ", column " + std::to_string(col));
        }
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& vars, const std::vector<std::string>& params)
      : tokens_(std::move(tokens)), vars_(vars), params_(params) {}

  RationalFunction parse() {
    RationalFunction e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] static void fail(const std::string& what, const Token& at) {
    throw Error(ErrorKind::ParseError,
                what + " at line " + std::to_string(at.line) + ", column " + std::to_string(at.column));
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = take().kind == Tok::Plus;
      RationalFunction rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Star || t.kind == Tok::Slash) {
        take();
        RationalFunction rhs = unary();
        if (t.kind == Tok::Star) {
          acc = acc * rhs;
        } else {
          if (rhs.is_zero()) fail("division by zero", t);
          acc = acc / rhs;
        }
      } else if (t.kind == Tok::Number || t.kind == Tok::Name || t.kind == Tok::LParen) {
        fail("implicit multiplication is not allowed before '" + t.text + "'", t);
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek().kind != Tok::Caret) return base;
    take();
    unsigned e = exponent();
    return base.pow(e);
  }

  // right-associative: x^2^3 = x^(2^3)
  unsigned exponent() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) fail("negative exponent", t);
    RationalFunction value = primary();
    if (peek().kind == Tok::Caret) {
      take();
      value = value.pow(exponent());
    }
    if (!value.is_constant()) fail("exponent must be a nonnegative integer constant", t);
    Rational q = value.num().constant_term();
    if (q.get_den() != 1 || q < 0) fail("exponent must be a nonnegative integer", t);
    if (q > 4096) fail("exponent too large", t);
    return static_cast<unsigned>(q.get_num().get_ui());
  }

  RationalFunction primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number: {
        if (std::count(t.text.begin(), t.text.end(), '.') > 1 || t.text == ".") fail("malformed number", t);
        return RationalFunction(parse_rational(t.text));
      }
      case Tok::Name: {
        bool known = std::find(vars_.begin(), vars_.end(), t.text) != vars_.end() ||
                     std::find(params_.begin(), params_.end(), t.text) != params_.end();
        if (!known) {
          throw Error(ErrorKind::UnknownIdentifier, "'" + t.text + "' at line " + std::to_string(t.line) +
                                                        ", column " + std::to_string(t.column));
        }
        return RationalFunction::variable(t.text);
      }
      case Tok::LParen: {
        RationalFunction inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek());
        take();
        return inner;
      }
      case Tok::End: fail("unexpected end of input", t);
      default: fail("unexpected '" + t.text + "'", t);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
  const std::vector<std::string>& params_;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const std::vector<std::string>& vars,
                                  const std::vector<std::string>& params) {
  Parser parser(Lexer(text).run(), vars, params);
  return parser.parse();
}

}  // namespace cyclecert
