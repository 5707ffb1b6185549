#include "apolar/parse.hpp"

#include <cctype>
#include <map>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

struct Token {
  enum Kind { Num, Var, Plus, Minus, Star, Caret, Slash, End } kind;
  std::string text;     // digits for Num
  long var_index = 0;   // 1-based for Var
  std::size_t pos = 0;  // position in the input, for error messages
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw input_error("parse error at position " + std::to_string(pos + 1) +
                    ": " + what);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    Token t;
    t.pos = i;
    if (c == '+') { t.kind = Token::Plus; ++i; }
    else if (c == '-') { t.kind = Token::Minus; ++i; }
    else if (c == '*') { t.kind = Token::Star; ++i; }
    else if (c == '^') { t.kind = Token::Caret; ++i; }
    else if (c == '/') { t.kind = Token::Slash; ++i; }
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        t.text += text[i++];
    } else if (c == 'y' || c == 'x') {
      std::size_t j = i + 1;
      std::string digits;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        digits += text[j++];
      if (digits.empty()) fail(i, "variable needs a numeric index (e.g. y1)");
      t.kind = Token::Var;
      t.var_index = std::stol(digits);
      if (t.var_index < 1) fail(i, "variable index must be at least 1");
      i = j;
    } else {
      fail(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.pos = text.size();
  out.push_back(end);
  return out;
}

struct RawTerm {
  Rational coef;
  std::map<long, int> exps;  // 1-based variable -> exponent
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> terms;
    int sign = 1;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      sign = peek().kind == Token::Minus ? -1 : 1;
      ++i_;
    }
    terms.push_back(term(sign));
    while (peek().kind != Token::End) {
      Token sep = peek();
      if (sep.kind != Token::Plus && sep.kind != Token::Minus)
        fail(sep.pos, "expected '+' or '-' between terms");
      ++i_;
      terms.push_back(term(sep.kind == Token::Minus ? -1 : 1));
    }
    return terms;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = i_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }

  RawTerm term(int sign) {
    RawTerm t;
    t.coef = Rational(static_cast<long>(sign));
    // Optional coefficient, itself optionally signed.
    int coef_sign = 1;
    std::size_t mark = i_;
    if (peek().kind == Token::Minus && peek(1).kind == Token::Num) {
      coef_sign = -1;
      ++i_;
    }
    if (peek().kind == Token::Num) {
      Int num(peek().text);
      ++i_;
      Int den = 1;
      if (peek().kind == Token::Slash) {
        ++i_;
        if (peek().kind != Token::Num)
          fail(peek().pos, "expected positive integer after '/'");
        den = Int(peek().text);
        if (den == 0) fail(peek().pos, "zero denominator");
        ++i_;
      }
      t.coef *= Rational(coef_sign * num, den);
      if (peek().kind != Token::Star)
        fail(peek().pos, "expected '*' after coefficient");
      ++i_;
    } else if (coef_sign == -1) {
      i_ = mark;  // lone '-' was not a coefficient sign; re-read as separator
      fail(peek().pos, "expected term");
    }
    factor(t);
    while (peek().kind == Token::Star) {
      ++i_;
      factor(t);
    }
    return t;
  }

  void factor(RawTerm& t) {
    if (peek().kind != Token::Var)
      fail(peek().pos, "expected variable (e.g. y1)");
    long var = peek().var_index;
    ++i_;
    int exp = 1;
    if (peek().kind == Token::Caret) {
      ++i_;
      if (peek().kind != Token::Num)
        fail(peek().pos, "expected exponent after '^'");
      exp = static_cast<int>(std::stol(peek().text));
      ++i_;
    }
    t.exps[var] += exp;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int min_vars) {
  Parser parser(text);
  std::vector<RawTerm> terms = parser.run();
  long maxvar = min_vars;
  for (const RawTerm& t : terms)
    for (const auto& [v, e] : t.exps)
      if (v > maxvar) maxvar = v;
  if (maxvar < 1) maxvar = 1;
  Polynomial p(static_cast<int>(maxvar));
  for (const RawTerm& t : terms) {
    Monomial m = Monomial::one(static_cast<int>(maxvar));
    for (const auto& [v, e] : t.exps) m.e[v - 1] += e;
    p.add_term(m, t.coef);
  }
  return p;
}

}  // namespace apolar
