#include "apery/parse.hpp"

#include <cctype>
#include <map>

namespace apery {

namespace {

struct Token {
  enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                "syntax error at position " + std::to_string(tok_.pos) + ": " + msg);
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::Kind::End, "", start};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Kind::Int, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Kind::Ident, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_ = {Token::Kind::Plus, "+", start}; return;
      case '-': tok_ = {Token::Kind::Minus, "-", start}; return;
      case '*': tok_ = {Token::Kind::Star, "*", start}; return;
      case '/': tok_ = {Token::Kind::Slash, "/", start}; return;
      case '^': tok_ = {Token::Kind::Caret, "^", start}; return;
      case '(': tok_ = {Token::Kind::LParen, "(", start}; return;
      case ')': tok_ = {Token::Kind::RParen, ")", start}; return;
      case ',': tok_ = {Token::Kind::Comma, ",", start}; return;
      default:
        throw Error(ErrorCode::ParseError, "syntax error at position " + std::to_string(start) +
                                               ": unexpected character '" + std::string(1, c) + "'");
    }
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_{Token::Kind::End, "", 0};
};

unsigned parse_uint_token(Lexer& lx) {
  if (lx.peek().kind != Token::Kind::Int) lx.fail("expected integer exponent");
  Token t = lx.next();
  return static_cast<unsigned>(std::stoul(t.text));
}

// ---------- operator DSL: bivariate polynomial in (n, N) ----------

// index = power of N, value = polynomial in n
using BivarPoly = std::vector<PolyQ>;

BivarPoly bv_const(const Rational& c) { return {PolyQ::constant(c, "n")}; }

BivarPoly bv_trim(BivarPoly v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  if (v.empty()) v.push_back(PolyQ("n"));
  return v;
}

BivarPoly bv_add(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r(std::max(a.size(), b.size()), PolyQ("n"));
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return bv_trim(std::move(r));
}

BivarPoly bv_neg(const BivarPoly& a) {
  BivarPoly r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(-p);
  return r;
}

BivarPoly bv_mul(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r(a.size() + b.size() - 1, PolyQ("n"));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return bv_trim(std::move(r));
}

BivarPoly bv_pow(const BivarPoly& a, unsigned e) {
  BivarPoly r = bv_const(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = bv_mul(r, a);
  return r;
}

class OperatorParser {
 public:
  explicit OperatorParser(Lexer& lx) : lx_(lx) {}

  BivarPoly expr() {
    bool neg = false;
    if (lx_.peek().kind == Token::Kind::Minus) {
      lx_.next();
      neg = true;
    }
    BivarPoly acc = term();
    if (neg) acc = bv_neg(acc);
    while (lx_.peek().kind == Token::Kind::Plus || lx_.peek().kind == Token::Kind::Minus) {
      bool minus = lx_.next().kind == Token::Kind::Minus;
      BivarPoly t = term();
      acc = bv_add(acc, minus ? bv_neg(t) : t);
    }
    return acc;
  }

 private:
  BivarPoly term() {
    BivarPoly acc = factor();
    while (lx_.peek().kind == Token::Kind::Star) {
      lx_.next();
      acc = bv_mul(acc, factor());
    }
    return acc;
  }

  BivarPoly factor() {
    BivarPoly b = base();
    if (lx_.peek().kind == Token::Kind::Caret) {
      lx_.next();
      b = bv_pow(b, parse_uint_token(lx_));
    }
    return b;
  }

  BivarPoly base() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        Token tok = lx_.next();
        return bv_const(Rational(Integer(tok.text)));
      }
      case Token::Kind::Ident: {
        Token tok = lx_.next();
        if (tok.text == "n") return {PolyQ::variable("n")};
        if (tok.text == "N") return {PolyQ("n"), PolyQ::constant(Rational(1), "n")};
        throw Error(ErrorCode::ParseError, "syntax error at position " + std::to_string(tok.pos) +
                                               ": unknown symbol '" + tok.text + "'");
      }
      case Token::Kind::LParen: {
        lx_.next();
        BivarPoly e = expr();
        if (lx_.peek().kind != Token::Kind::RParen) lx_.fail("expected ')'");
        lx_.next();
        return e;
      }
      default:
        lx_.fail("expected integer, symbol, or '('");
    }
  }

  Lexer& lx_;
};

// ---------- Laurent DSL ----------

class LaurentParser {
 public:
  explicit LaurentParser(Lexer& lx) : lx_(lx) {}

  LaurentPoly expr() {
    bool neg = false;
    if (lx_.peek().kind == Token::Kind::Minus) {
      lx_.next();
      neg = true;
    }
    LaurentPoly acc = term();
    if (neg) acc = acc.scaled(Rational(-1));
    while (lx_.peek().kind == Token::Kind::Plus || lx_.peek().kind == Token::Kind::Minus) {
      bool minus = lx_.next().kind == Token::Kind::Minus;
      LaurentPoly t = term();
      acc = acc + (minus ? t.scaled(Rational(-1)) : t);
    }
    return acc;
  }

 private:
  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (lx_.peek().kind == Token::Kind::Star) {
      lx_.next();
      acc = acc * factor();
    }
    return acc;
  }

  LaurentPoly factor() {
    LaurentPoly b = base();
    if (lx_.peek().kind == Token::Kind::Caret) {
      lx_.next();
      unsigned e = parse_uint_token(lx_);
      LaurentPoly r = LaurentPoly::unit();
      for (unsigned i = 0; i < e; ++i) r = r * b;
      b = std::move(r);
    }
    while (lx_.peek().kind == Token::Kind::Slash) {
      Token slash = lx_.next();
      if (lx_.peek().kind != Token::Kind::Ident || lx_.peek().text != "x") {
        throw Error(ErrorCode::ParseError,
                    "syntax error at position " + std::to_string(slash.pos) +
                        ": division is only allowed by a monomial power of x");
      }
      lx_.next();
      long e = 1;
      if (lx_.peek().kind == Token::Kind::Caret) {
        lx_.next();
        e = static_cast<long>(parse_uint_token(lx_));
      }
      std::map<long, Rational> shifted;
      for (const auto& [ex, c] : b.coeffs()) shifted[ex - e] = c;
      b = LaurentPoly(std::move(shifted));
    }
    return b;
  }

  LaurentPoly base() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        Token tok = lx_.next();
        LaurentPoly p;
        p.set(0, Rational(Integer(tok.text)));
        return p;
      }
      case Token::Kind::Ident: {
        Token tok = lx_.next();
        if (tok.text == "x") {
          LaurentPoly p;
          p.set(1, Rational(1));
          return p;
        }
        throw Error(ErrorCode::ParseError, "syntax error at position " + std::to_string(tok.pos) +
                                               ": unknown symbol '" + tok.text + "'");
      }
      case Token::Kind::LParen: {
        lx_.next();
        LaurentPoly e = expr();
        if (lx_.peek().kind != Token::Kind::RParen) lx_.fail("expected ')'");
        lx_.next();
        return e;
      }
      default:
        lx_.fail("expected integer, 'x', or '('");
    }
  }

  Lexer& lx_;
};

// ---------- summand DSL ----------

// exponents (i,j) of n^i k^j -> coefficient, for linear-form parsing
using NKPoly = std::map<std::pair<int, int>, Rational>;

NKPoly nk_const(const Rational& c) {
  NKPoly p;
  if (!c.is_zero()) p[{0, 0}] = c;
  return p;
}

NKPoly nk_add(const NKPoly& a, const NKPoly& b, const Rational& sign) {
  NKPoly r = a;
  for (const auto& [e, c] : b) {
    auto it = r.find(e);
    if (it == r.end()) {
      r[e] = c * sign;
    } else {
      it->second += c * sign;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

NKPoly nk_mul(const NKPoly& a, const NKPoly& b) {
  NKPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      auto it = r.find(e);
      if (it == r.end()) {
        r[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

class LinFormParser {
 public:
  explicit LinFormParser(Lexer& lx) : lx_(lx) {}

  LinearForm parse() {
    NKPoly p = expr();
    LinearForm f;
    for (const auto& [e, c] : p) {
      if (!c.is_integer()) {
        throw Error(ErrorCode::ParseError, "linear form must have integer coefficients");
      }
      if (e == std::pair<int, int>{0, 0}) {
        f.constant = c.num();
      } else if (e == std::pair<int, int>{1, 0}) {
        f.n_coeff = c.num();
      } else if (e == std::pair<int, int>{0, 1}) {
        f.k_coeff = c.num();
      } else {
        throw Error(ErrorCode::ParseError, "binomial arguments must be linear in n and k");
      }
    }
    return f;
  }

 private:
  NKPoly expr() {
    Rational sign(1);
    if (lx_.peek().kind == Token::Kind::Minus) {
      lx_.next();
      sign = Rational(-1);
    }
    NKPoly acc = nk_add(NKPoly{}, term(), sign);
    while (lx_.peek().kind == Token::Kind::Plus || lx_.peek().kind == Token::Kind::Minus) {
      bool minus = lx_.next().kind == Token::Kind::Minus;
      acc = nk_add(acc, term(), Rational(minus ? -1 : 1));
    }
    return acc;
  }

  NKPoly term() {
    NKPoly acc = base();
    while (lx_.peek().kind == Token::Kind::Star) {
      lx_.next();
      acc = nk_mul(acc, base());
    }
    return acc;
  }

  NKPoly base() {
    const Token& t = lx_.peek();
    if (t.kind == Token::Kind::Int) {
      return nk_const(Rational(Integer(lx_.next().text)));
    }
    if (t.kind == Token::Kind::Ident) {
      Token tok = lx_.next();
      NKPoly p;
      if (tok.text == "n") {
        p[{1, 0}] = Rational(1);
      } else if (tok.text == "k") {
        p[{0, 1}] = Rational(1);
      } else {
        throw Error(ErrorCode::ParseError, "unknown symbol '" + tok.text + "' in linear form");
      }
      return p;
    }
    if (t.kind == Token::Kind::LParen) {
      lx_.next();
      NKPoly e = expr();
      if (lx_.peek().kind != Token::Kind::RParen) lx_.fail("expected ')'");
      lx_.next();
      return e;
    }
    lx_.fail("expected integer, n, k, or '('");
  }

  Lexer& lx_;
};

}  // namespace

RecOperator parse_operator(const std::string& text) {
  Lexer lx(text);
  OperatorParser p(lx);
  BivarPoly bv = p.expr();
  if (lx.peek().kind != Token::Kind::End) lx.fail("unexpected trailing input");
  if (bv.size() < 2) {
    throw Error(ErrorCode::NotARecurrence, "not a recurrence: no positive power of N");
  }
  return RecOperator(std::move(bv));
}

LaurentPoly parse_laurent(const std::string& text) {
  Lexer lx(text);
  LaurentParser p(lx);
  LaurentPoly l = p.expr();
  if (lx.peek().kind != Token::Kind::End) lx.fail("unexpected trailing input");
  return l;
}

HyperSummand parse_summand(const std::string& text) {
  Lexer lx(text);
  HyperSummand F;
  bool lead_minus = false;
  if (lx.peek().kind == Token::Kind::Minus) {
    lx.next();
    lead_minus = true;
  }
  bool first = true;
  while (true) {
    if (!first) {
      if (lx.peek().kind != Token::Kind::Star) break;
      lx.next();
    }
    first = false;
    const Token& t = lx.peek();
    if (t.kind == Token::Kind::Ident && (t.text == "binomial" || t.text == "C")) {
      lx.next();
      if (lx.peek().kind != Token::Kind::LParen) lx.fail("expected '(' after binomial");
      lx.next();
      LinFormParser lfp(lx);
      BinomialFactor bf;
      bf.top = lfp.parse();
      if (lx.peek().kind != Token::Kind::Comma) lx.fail("expected ',' in binomial");
      lx.next();
      bf.bottom = lfp.parse();
      if (lx.peek().kind != Token::Kind::RParen) lx.fail("expected ')' after binomial");
      lx.next();
      if (lx.peek().kind == Token::Kind::Caret) {
        lx.next();
        bf.exponent = parse_uint_token(lx);
      }
      F.binomial_factors.push_back(std::move(bf));
      continue;
    }
    // scalar or geometric factor: int, int/int, (int/int), each optionally ^k or ^uint
    Rational base(1);
    if (t.kind == Token::Kind::Int) {
      base = Rational(Integer(lx.next().text));
      if (lx.peek().kind == Token::Kind::Slash) {
        lx.next();
        if (lx.peek().kind != Token::Kind::Int) lx.fail("expected integer denominator");
        base = base / Rational(Integer(lx.next().text));
      }
    } else if (t.kind == Token::Kind::LParen) {
      lx.next();
      if (lx.peek().kind != Token::Kind::Int) lx.fail("expected integer");
      base = Rational(Integer(lx.next().text));
      if (lx.peek().kind == Token::Kind::Slash) {
        lx.next();
        if (lx.peek().kind != Token::Kind::Int) lx.fail("expected integer denominator");
        base = base / Rational(Integer(lx.next().text));
      }
      if (lx.peek().kind != Token::Kind::RParen) lx.fail("expected ')'");
      lx.next();
    } else {
      lx.fail("expected binomial factor or scalar");
    }
    if (lx.peek().kind == Token::Kind::Caret) {
      lx.next();
      if (lx.peek().kind == Token::Kind::Ident && lx.peek().text == "k") {
        lx.next();
        F.geometric_base = F.geometric_base * base;
        continue;
      }
      unsigned e = parse_uint_token(lx);
      F.scalar = F.scalar * base.pow(static_cast<long>(e));
      continue;
    }
    F.scalar = F.scalar * base;
  }
  if (lx.peek().kind != Token::Kind::End) lx.fail("unexpected trailing input");
  if (lead_minus) F.scalar = -F.scalar;
  return F;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::string s = text;
  // strip optional brackets
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) throw Error(ErrorCode::BadArgument, "empty list");
  s = s.substr(a, b - a + 1);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::BadArgument, "unbalanced brackets in list");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t i0 = item.find_first_not_of(" \t");
    size_t i1 = item.find_last_not_of(" \t");
    if (i0 == std::string::npos) throw Error(ErrorCode::BadArgument, "empty list element");
    out.emplace_back(item.substr(i0, i1 - i0 + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace apery
