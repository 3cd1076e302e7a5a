#include "diagcat/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "diagcat/errors.hpp"

namespace diagcat {

Scalar Scalar::from_rational(const Rational& v) { return monomial(v, 0, 0); }

Scalar Scalar::monomial(const Rational& c, int beta2, int omega2) {
  Scalar s;
  if (c != 0) s.terms_[{beta2, omega2}] = c;
  return s;
}

void Scalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [key, c] : o.terms_) terms_[key] += c;
  prune();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [key, c] : o.terms_) terms_[key] -= c;
  prune();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [key, c] : terms_) r.terms_[key] = -c;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.terms_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    }
  }
  r.prune();
  return r;
}

double Scalar::eval(double beta0, double omega0) const {
  if (!(beta0 > 0.0) || !(omega0 > 0.0)) {
    throw Error("scalar evaluation needs positive beta and omega");
  }
  double total = 0.0;
  for (const auto& [key, c] : terms_) {
    total += to_double(c) * std::pow(beta0, key.first / 2.0) *
             std::pow(omega0, key.second / 2.0);
  }
  return total;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << " * b^(" << key.first << "/2) * w^(" << key.second
        << "/2)";
  }
  return out.str();
}

namespace {

struct ScalarLexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit ScalarLexer(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) {
      throw ParseError("scalar text: expected '" + std::string(1, c) + "' in \"" + text + "\"");
    }
  }

  BigInt integer() {
    skip_space();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("scalar text: expected integer in \"" + text + "\"");
    }
    BigInt v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? BigInt(-v) : v;
  }
};

// exponent := int | '(' int ['/' (1|2)] ')'; returns the doubled value.
int parse_exponent(ScalarLexer& lex) {
  if (lex.consume('(')) {
    BigInt num = lex.integer();
    BigInt den = 1;
    if (lex.consume('/')) den = lex.integer();
    lex.expect(')');
    if (den == 1) {
      num *= 2;
    } else if (den != 2) {
      throw ParseError("scalar text: exponent denominator must be 1 or 2");
    }
    return num.convert_to<int>();
  }
  BigInt v = lex.integer();
  return (v * 2).convert_to<int>();
}

// factor := rational | ('b'|'w'|'d') ['^' exponent]
// Accumulates into coefficient and doubled exponents.
void parse_factor(ScalarLexer& lex, Rational& coeff, int& b2, int& w2) {
  char c = lex.peek();
  if (c == 'b' || c == 'w' || c == 'd') {
    ++lex.pos;
    int e2 = 2;  // bare symbol means one full power
    if (lex.consume('^')) e2 = parse_exponent(lex);
    if (c == 'b') {
      b2 += e2;
    } else if (c == 'w') {
      w2 += e2;
    } else {
      b2 += e2;
      w2 += e2;
    }
    return;
  }
  BigInt num = lex.integer();
  BigInt den = 1;
  if (lex.consume('/')) den = lex.integer();
  if (den == 0) throw ParseError("scalar text: zero denominator");
  coeff *= Rational(num, den);
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  ScalarLexer lex(text);
  if (lex.done()) throw ParseError("scalar text: empty input");
  Scalar result;
  bool negate = lex.consume('-');
  if (!negate) lex.consume('+');
  while (true) {
    Rational coeff = 1;
    int b2 = 0;
    int w2 = 0;
    parse_factor(lex, coeff, b2, w2);
    while (lex.consume('*')) parse_factor(lex, coeff, b2, w2);
    if (negate) coeff = -coeff;
    result += monomial(coeff, b2, w2);
    if (lex.done()) break;
    if (lex.consume('+')) {
      negate = false;
    } else if (lex.consume('-')) {
      negate = true;
    } else {
      throw ParseError("scalar text: unexpected character in \"" + text + "\"");
    }
  }
  return result;
}

}  // namespace diagcat
