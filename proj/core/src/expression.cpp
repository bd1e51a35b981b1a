#include "ocad/expression.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ocad/errors.hpp"

namespace ocad {

namespace {

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const UniversePtr& universe) : text_(text), universe_(universe) {}

  Polynomial parse() {
    skipSpace();
    if (atEnd()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skipSpace();
    if (!atEnd()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skipSpace();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skipSpace();
      if (!accept('*')) return acc;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skipSpace();
    if (accept('-')) return -factor();
    return factor();
  }

  Polynomial factor() {
    Polynomial b = base();
    skipSpace();
    if (accept('^')) {
      skipSpace();
      const std::size_t at = pos_;
      const mpz_class e = integer();
      if (e > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", at);
      return b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Polynomial base() {
    skipSpace();
    if (atEnd()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skipSpace();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (isDigit(c)) {
      const mpz_class num = integer();
      skipSpace();
      if (accept('/')) {
        skipSpace();
        const std::size_t at = pos_;
        const mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        return Polynomial::constant(universe_, Rational(num, den));
      }
      return Polynomial::constant(universe_, Rational(num));
    }
    if (isIdentStart(c)) {
      const std::size_t start = pos_;
      while (!atEnd() && isIdentChar(text_[pos_])) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto v = universe_->find(name);
      if (!v) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      return Polynomial::variable(universe_, *v);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!atEnd() && isDigit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    if (!atEnd() && isIdentStart(text_[pos_])) throw ParseError("implicit multiplication is not allowed", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool accept(char c) {
    if (!atEnd() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool atEnd() const { return pos_ >= text_.size(); }

  std::string_view text_;
  const UniversePtr& universe_;
  std::size_t pos_ = 0;
};

std::string monomial(const Polynomial::Exponents& e, const VariableUniverse& u) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += u.names()[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

Polynomial parsePolynomial(std::string_view text, const UniversePtr& universe) {
  if (!universe) throw InvalidArgument("no variable universe");
  return Parser(text, universe).parse();
}

std::vector<std::string> identifiersIn(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (isIdentStart(text[i]) && (i == 0 || !isIdentChar(text[i - 1]))) {
      std::size_t j = i;
      while (j < text.size() && isIdentChar(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

std::string render(const Polynomial& p) {
  if (p.isZero()) return "0";
  using Term = std::pair<const Polynomial::Exponents*, const Rational*>;
  std::vector<Term> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(&e, &c);
  auto degree = [](const Polynomial::Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    const auto da = degree(*a.first);
    const auto db = degree(*b.first);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });

  std::string out;
  for (const auto& [e, c] : terms) {
    const std::string mono = monomial(*e, *p.universe());
    const Rational mag = c->abs();
    if (out.empty()) {
      if (c->sign() < 0) out += '-';
    } else {
      out += c->sign() < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.toString();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.toString() + "*" + mono;
    }
  }
  return out;
}

}  // namespace ocad
