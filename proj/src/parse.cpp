#include "qgb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "qgb/order.hpp"

namespace qgb {

namespace {

struct Token {
  enum class Kind { End, Int, Name, Punct };
  Kind kind = Kind::End;
  std::string text;
  char punct = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::Int;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
        tok_.text += text_[i_++];
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Kind::Name;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
        tok_.text += text_[i_++];
      return;
    }
    tok_.kind = Token::Kind::Punct;
    tok_.punct = c;
    ++i_;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet) : lex_(text), alphabet_(alphabet) {}

  Polynomial parse() {
    if (lex_.peek().kind == Token::Kind::End) throw parse_error("empty input", 0);
    Polynomial f = expr();
    if (lex_.peek().kind != Token::Kind::End)
      throw parse_error("unexpected trailing input", lex_.peek().pos);
    return f;
  }

 private:
  bool punct(char c) const {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().punct == c;
  }

  Polynomial expr() {
    Rational sign = 1;
    if (punct('+')) {
      lex_.take();
    } else if (punct('-')) {
      lex_.take();
      sign = -1;
    }
    Polynomial f = sign * term();
    while (punct('+') || punct('-')) {
      const bool minus = lex_.take().punct == '-';
      const Polynomial t = term();
      if (minus)
        f -= t;
      else
        f += t;
    }
    return f;
  }

  Polynomial term() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Int) {
      const Rational c = rational();
      Polynomial f = Polynomial::constant(c);
      while (punct('*')) {
        lex_.take();
        f = f * factor();
      }
      return f;
    }
    Polynomial f = factor();
    while (punct('*')) {
      lex_.take();
      f = f * factor();
    }
    return f;
  }

  Rational rational() {
    const Token num = lex_.take();
    std::string text = num.text;
    if (punct('/')) {
      lex_.take();
      if (lex_.peek().kind != Token::Kind::Int)
        throw parse_error("malformed rational", lex_.peek().pos);
      text += "/" + lex_.take().text;
    }
    try {
      return Rational::parse(text);
    } catch (const input_error& e) {
      throw parse_error(e.what(), num.pos);
    }
  }

  Polynomial factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Name) {
      const Token name = lex_.take();
      const auto id = alphabet_.find(name.text);
      if (!id) throw parse_error("unknown symbol '" + name.text + "'", name.pos);
      unsigned exp = 1;
      if (punct('^')) {
        lex_.take();
        if (lex_.peek().kind != Token::Kind::Int)
          throw parse_error("expected a positive integer exponent", lex_.peek().pos);
        const Token e = lex_.take();
        exp = 0;
        for (char c : e.text) {
          exp = exp * 10 + static_cast<unsigned>(c - '0');
          if (exp > 4096) throw parse_error("exponent too large", e.pos);
        }
        if (exp == 0) throw parse_error("expected a positive integer exponent", e.pos);
      }
      return Polynomial::term(1, Monomial::letter(*id).pow(exp));
    }
    if (punct('(')) {
      lex_.take();
      Polynomial f = expr();
      if (!punct(')')) throw parse_error("expected ')'", lex_.peek().pos);
      lex_.take();
      return f;
    }
    if (t.kind == Token::Kind::Int && t.text == "1") {
      lex_.take();
      return Polynomial::one();
    }
    throw parse_error("expected a symbol, '(' or 1", t.pos);
  }

  Lexer lex_;
  const Alphabet& alphabet_;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

Monomial parse_monomial(const std::string& text, const Alphabet& alphabet) {
  const Polynomial f = parse_poly(text, alphabet);
  if (f.term_count() != 1 || !f.terms().begin()->second.is_one())
    throw input_error("expected a monomial: '" + text + "'");
  return f.terms().begin()->first;
}

std::string format_monomial(const Monomial& m, const Alphabet& alphabet) {
  if (m.is_one()) return "1";
  std::string out;
  const auto& w = m.word();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += "*";
    out += alphabet.name(w[i]);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

std::string format_poly(const Polynomial& f, const Alphabet& alphabet, const MonomialOrder* ord) {
  if (f.is_zero()) return "0";
  std::vector<Monomial> mons = f.support();
  if (ord) {
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return ord->greater(a, b); });
  } else {
    std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
  }
  std::string out;
  bool first = true;
  for (const auto& m : mons) {
    const Rational c = f.coeff(m);
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational a = c.abs();
    if (m.is_one()) {
      out += a.str();
    } else if (a.is_one()) {
      out += format_monomial(m, alphabet);
    } else {
      out += a.str() + "*" + format_monomial(m, alphabet);
    }
  }
  return out;
}

}  // namespace qgb
