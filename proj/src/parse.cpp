#include "hqcf/parse.hpp"

#include <cctype>
#include <cstdint>

namespace hqcf {

namespace {

enum class Tok { Int, VarT, VarX, VarU, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  uint64_t value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 0;
      } else {
        ++col_;
      }
      ++pos_;
    }
    cur_.line = line_;
    cur_.col = col_ + 1;
    if (pos_ >= s_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = s_[pos_];
    if (std::isdigit((unsigned char)c)) {
      uint64_t v = 0;
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        v = v * 10 + (uint64_t)(s_[pos_] - '0');
        if (v > (uint64_t)1 << 62) throw ParseError("integer literal too large", line_, col_ + 1);
        ++pos_;
      }
      col_ += (int)(pos_ - start);
      cur_.kind = Tok::Int;
      cur_.value = v;
      return;
    }
    ++pos_;
    ++col_;
    switch (c) {
      case 'T': cur_.kind = Tok::VarT; return;
      case 'X': cur_.kind = Tok::VarX; return;
      case 'u': cur_.kind = Tok::VarU; return;
      case '+': cur_.kind = Tok::Plus; return;
      case '-': cur_.kind = Tok::Minus; return;
      case '*': cur_.kind = Tok::Star; return;
      case '/': cur_.kind = Tok::Slash; return;
      case '^': cur_.kind = Tok::Caret; return;
      case '(': cur_.kind = Tok::LParen; return;
      case ')': cur_.kind = Tok::RParen; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(const std::string& text, const FieldSpec* spec) : lex_(text), spec_(spec) {}

  XPoly parse() {
    XPoly v = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError("trailing input", t.line, t.col);
    return v;
  }

 private:
  XPoly one() const {
    return XPoly::monomial(spec_, RationalFunc::from_fe(spec_, fe_from_int(*spec_, 1)), 0);
  }

  XPoly expr() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    XPoly v = term();
    if (neg) v = -v;
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        v = v + term();
      } else if (k == Tok::Minus) {
        lex_.take();
        v = v - term();
      } else {
        return v;
      }
    }
  }

  static bool starts_factor(Tok k) {
    return k == Tok::Int || k == Tok::VarT || k == Tok::VarX || k == Tok::VarU ||
           k == Tok::LParen;
  }

  XPoly term() {
    XPoly v = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Star) {
        lex_.take();
        v = v * factor();
      } else if (t.kind == Tok::Slash) {
        Token slash = lex_.take();
        XPoly d = factor();
        if (!d.is_zero() && d.degree() >= 1)
          throw ParseError("division by an X-polynomial", slash.line, slash.col);
        if (d.is_zero()) throw ParseError("division by zero", slash.line, slash.col);
        v = v * d.coeff(0).inv();
      } else if (starts_factor(t.kind)) {
        v = v * factor();  // implicit multiplication
      } else {
        return v;
      }
    }
  }

  XPoly factor() {
    XPoly v = atom();
    if (lex_.peek().kind == Tok::Caret) {
      Token caret = lex_.take();
      const Token& e = lex_.peek();
      if (e.kind != Tok::Int) throw ParseError("expected integer exponent", e.line, e.col);
      uint64_t exp = lex_.take().value;
      if (!v.is_zero() && (uint64_t)(v.degree() + 1) * exp > 2000000)
        throw ParseError("exponent too large", caret.line, caret.col);
      XPoly r = one();
      XPoly base = v;
      while (exp) {
        if (exp & 1) r = r * base;
        exp >>= 1;
        if (exp) base = base * base;
      }
      return r;
    }
    return v;
  }

  XPoly atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Int:
        return XPoly::monomial(spec_,
                               RationalFunc::from_fe(spec_, fe_from_int(*spec_, (long long)t.value)),
                               0);
      case Tok::VarT:
        return XPoly::monomial(spec_, RationalFunc(TPoly::variable(spec_)), 0);
      case Tok::VarX:
        return XPoly::variable(spec_);
      case Tok::VarU:
        if (spec_->n < 2)
          throw ParseError("'u' is only defined over an extension field", t.line, t.col);
        return XPoly::monomial(spec_, RationalFunc::from_fe(spec_, Fe{0, 1}), 0);
      case Tok::LParen: {
        XPoly v = expr();
        const Token& r = lex_.peek();
        if (r.kind != Tok::RParen) throw ParseError("expected ')'", r.line, r.col);
        lex_.take();
        return v;
      }
      default:
        throw ParseError("expected a value", t.line, t.col);
    }
  }

  Lexer lex_;
  const FieldSpec* spec_;
};

}  // namespace

XPoly parse_xpoly(const std::string& text, const FieldSpec* spec) {
  return Parser(text, spec).parse();
}

RationalFunc parse_rational(const std::string& text, const FieldSpec* spec) {
  XPoly v = parse_xpoly(text, spec);
  if (!v.is_zero() && v.degree() >= 1)
    throw ParseError("expected an expression without X", 1, 1);
  return v.is_zero() ? RationalFunc::zero(spec) : v.coeff(0);
}

TPoly parse_tpoly(const std::string& text, const FieldSpec* spec) {
  RationalFunc r = parse_rational(text, spec);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial, found a quotient", 1, 1);
  // den is a nonzero constant after normalization
  return r.num().scaled(fe_inv(*spec, r.den().coeff(0)));
}

}  // namespace hqcf
