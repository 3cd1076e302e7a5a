#include "diagcat/algebra.hpp"

#include <cctype>
#include <sstream>
#include <variant>

namespace diagcat {

Morphism Morphism::identity(Kind kind, int n) {
  return of(Diagram::identity(kind, n));
}

Morphism Morphism::of(const Diagram& d, const Scalar& c) {
  Morphism m(d.signature());
  m.add_term(d, c);
  return m;
}

void Morphism::add_term(const Diagram& d, const Scalar& c) {
  if (d.signature() != sig_) {
    throw SignatureMismatch("term signature differs from morphism signature");
  }
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Morphism::scalar_part() const {
  if (sig_.dom != 0 || sig_.cod != 0) {
    throw SignatureMismatch("scalar_part needs signature 0 -> 0");
  }
  if (terms_.empty()) return Scalar::zero();
  return terms_.begin()->second;
}

Morphism Morphism::operator+(const Morphism& o) const {
  if (sig_ != o.sig_) throw SignatureMismatch("sum of incompatible morphisms");
  Morphism r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
  if (sig_ != o.sig_) {
    throw SignatureMismatch("difference of incompatible morphisms");
  }
  Morphism r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
  return r;
}

Morphism Morphism::scaled(const Scalar& c) const {
  Morphism r(sig_);
  if (c.is_zero()) return r;
  for (const auto& [d, coeff] : terms_) r.add_term(d, coeff * c);
  return r;
}

Morphism Morphism::compose(const Morphism& rhs) const {
  if (sig_.kind != rhs.sig_.kind || sig_.dom != rhs.sig_.cod) {
    throw SignatureMismatch("compose: " + diagcat::to_string(sig_) + " after " +
                            diagcat::to_string(rhs.sig_));
  }
  Morphism r = zero(sig_.kind, rhs.sig_.dom, sig_.cod);
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : rhs.terms_) {
      const ComposeResult raw = compose_raw(da, db);
      const Scalar weight =
          sig_.kind == Kind::TL
              ? Scalar::delta_pow(2 * (raw.white_loops + raw.black_loops))
              : Scalar::monomial(1, 2 * raw.white_loops, 2 * raw.black_loops);
      r.add_term(raw.diagram, ca * cb * weight);
    }
  }
  return r;
}

Morphism Morphism::tensor(const Morphism& o) const {
  if (sig_.kind != o.sig_.kind) {
    throw SignatureMismatch("tensor of incompatible morphisms");
  }
  Morphism r = zero(sig_.kind, sig_.dom + o.sig_.dom, sig_.cod + o.sig_.cod);
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : o.terms_) {
      r.add_term(Diagram::tensor(da, db), ca * cb);
    }
  }
  return r;
}

Morphism Morphism::adjoint() const {
  Morphism r = zero(sig_.kind, sig_.cod, sig_.dom);
  for (const auto& [d, c] : terms_) r.add_term(d.adjoint(), c);
  return r;
}

std::string Morphism::to_string() const {
  std::ostringstream out;
  out << diagcat::to_string(sig_) << " : " << terms_.size() << " terms";
  for (const auto& [d, c] : terms_) {
    out << "\n  ";
    const auto pairs = d.pairs();
    if (pairs.empty()) {
      out << "()";
    } else {
      const int t = d.top_points();
      for (const auto& [x, y] : pairs) {
        auto label = [&](int i) {
          std::ostringstream s;
          if (i < t) {
            s << "t" << i + 1;
          } else {
            s << "b" << i - t + 1;
          }
          return s.str();
        };
        out << "(" << label(x) << "," << label(y) << ")";
      }
    }
    out << " : " << c.to_string();
  }
  return out.str();
}

namespace {

Morphism cup(Kind kind) {
  if (kind == Kind::TL) {
    return Morphism::of(Diagram::from_pairs(Kind::TL, 0, 1, {{0, 1}}),
                        Scalar::delta_pow(-1));
  }
  return Morphism::of(Diagram::from_pairs(Kind::FC, 0, 1, {{0, 3}, {1, 2}}),
                      Scalar::delta_pow(-1));
}

Morphism multiplication(Kind kind) {
  if (kind == Kind::TL) {
    return Morphism::of(
        Diagram::from_pairs(Kind::TL, 2, 1, {{0, 4}, {1, 2}, {3, 5}}),
        Scalar::delta_pow(1));
  }
  return Morphism::of(
      Diagram::from_pairs(Kind::FC, 2, 1,
                          {{0, 8}, {1, 9}, {6, 10}, {7, 11}, {2, 5}, {3, 4}}),
      Scalar::delta_pow(1));
}

Morphism tensor_power(Kind kind, const Morphism& x, int k) {
  Morphism acc = Morphism::identity(kind, 0);
  for (int i = 0; i < k; ++i) acc = acc.tensor(x);
  return acc;
}

}  // namespace

GeneratorSet GeneratorSet::build(Kind kind, int max_index) {
  if (max_index < 2) max_index = 2;
  GeneratorSet g(kind);
  g.u_ = cup(kind);
  g.m_ = multiplication(kind);
  if (kind == Kind::FC) {
    g.e_ = Morphism::of(
        Diagram::from_pairs(Kind::FC, 1, 1, {{0, 4}, {3, 7}, {1, 2}, {5, 6}}),
        Scalar::omega_pow(-2));
    g.f_ = Morphism::of(
        Diagram::from_pairs(Kind::FC, 2, 2,
                            {{0, 8},
                             {1, 9},
                             {2, 10},
                             {5, 13},
                             {6, 14},
                             {7, 15},
                             {3, 4},
                             {11, 12}}),
        Scalar::beta_pow(-2));
  }
  g.e_family_.push_back(g.u_.compose(g.u_.adjoint()));
  g.e_family_.push_back(
      g.m_.adjoint().compose(g.m_).scaled(Scalar::delta_pow(-4)));
  const Morphism one = Morphism::identity(kind, 1);
  for (int i = 3; i <= max_index; ++i) {
    g.e_family_.push_back(one.tensor(g.e_family_[i - 3]));
  }
  if (kind == Kind::FC) {
    g.p_family_.push_back(*g.e_);
    g.p_family_.push_back(*g.f_);
    for (int i = 3; i <= max_index; ++i) {
      g.p_family_.push_back(one.tensor(g.p_family_[i - 3]));
    }
  }
  return g;
}

const Morphism& GeneratorSet::e() const {
  if (!e_) throw Error("generator e exists only in the FC category");
  return *e_;
}

const Morphism& GeneratorSet::f() const {
  if (!f_) throw Error("generator f exists only in the FC category");
  return *f_;
}

const Morphism& GeneratorSet::jones_e(int i) const {
  if (i < 1 || i > static_cast<int>(e_family_.size())) {
    throw Error("Jones projection index out of the built range");
  }
  return e_family_[i - 1];
}

const Morphism& GeneratorSet::jones_p(int i) const {
  if (kind_ != Kind::FC) {
    throw Error("p projections exist only in the FC category");
  }
  if (i < 1 || i > static_cast<int>(p_family_.size())) {
    throw Error("Jones projection index out of the built range");
  }
  return p_family_[i - 1];
}

namespace {

struct WordToken {
  enum Type { LParen, RParen, Dot, Star, Ox, Name, ScalarLit, End };
  Type type;
  std::string name;
  Scalar scalar;
};

std::vector<WordToken> tokenize_word(const std::string& text) {
  std::vector<WordToken> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '(') {
      out.push_back({WordToken::LParen, "", {}});
      ++pos;
    } else if (c == ')') {
      out.push_back({WordToken::RParen, "", {}});
      ++pos;
    } else if (c == '.') {
      out.push_back({WordToken::Dot, "", {}});
      ++pos;
    } else if (c == '*') {
      out.push_back({WordToken::Star, "", {}});
      ++pos;
    } else if (c == '{') {
      const std::size_t close = text.find('}', pos + 1);
      if (close == std::string::npos) {
        throw ParseError("word: unterminated scalar literal");
      }
      out.push_back({WordToken::ScalarLit, "",
                     Scalar::parse(text.substr(pos + 1, close - pos - 1))});
      pos = close + 1;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_')) {
        ++pos;
      }
      const std::string word = text.substr(start, pos - start);
      if (word == "ox") {
        out.push_back({WordToken::Ox, "", {}});
      } else {
        out.push_back({WordToken::Name, word, {}});
      }
    } else {
      throw ParseError(std::string("word: unexpected character '") + c + "'");
    }
  }
  out.push_back({WordToken::End, "", {}});
  return out;
}

using WordValue = std::variant<Morphism, Scalar>;

class WordParser {
 public:
  WordParser(std::vector<WordToken> toks, const GeneratorSet& gens)
      : toks_(std::move(toks)), gens_(gens) {}

  Morphism run() {
    WordValue v = parse_chain();
    if (peek().type != WordToken::End) {
      throw ParseError("word: trailing input after the expression");
    }
    if (std::holds_alternative<Scalar>(v)) {
      throw ParseError("word: a bare scalar is not a morphism");
    }
    return std::get<Morphism>(v);
  }

 private:
  std::vector<WordToken> toks_;
  std::size_t pos_ = 0;
  const GeneratorSet& gens_;

  const WordToken& peek() const { return toks_[pos_]; }
  const WordToken& advance() { return toks_[pos_++]; }

  static Morphism pad_compose(Morphism a, Morphism acc) {
    const Kind kind = a.kind();
    if (a.dom() < acc.cod()) {
      a = a.tensor(Morphism::identity(kind, acc.cod() - a.dom()));
    } else if (a.dom() > acc.cod()) {
      acc = acc.tensor(Morphism::identity(kind, a.dom() - acc.cod()));
    }
    return a.compose(acc);
  }

  WordValue parse_chain() {
    std::vector<WordValue> factors;
    factors.push_back(parse_tens());
    while (peek().type == WordToken::Dot) {
      advance();
      factors.push_back(parse_tens());
    }
    Scalar scale = Scalar::one();
    std::optional<Morphism> acc;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (std::holds_alternative<Scalar>(*it)) {
        scale *= std::get<Scalar>(*it);
      } else if (!acc) {
        acc = std::get<Morphism>(*it);
      } else {
        acc = pad_compose(std::get<Morphism>(*it), *acc);
      }
    }
    if (!acc) return scale;
    return acc->scaled(scale);
  }

  WordValue parse_tens() {
    WordValue v = parse_atom();
    while (peek().type == WordToken::Ox) {
      advance();
      WordValue rhs = parse_atom();
      if (!std::holds_alternative<Morphism>(v) ||
          !std::holds_alternative<Morphism>(rhs)) {
        throw ParseError("word: scalar literals cannot be tensored");
      }
      v = std::get<Morphism>(v).tensor(std::get<Morphism>(rhs));
    }
    return v;
  }

  WordValue parse_atom() {
    WordValue v = parse_primary();
    while (peek().type == WordToken::Star) {
      advance();
      if (!std::holds_alternative<Morphism>(v)) {
        throw ParseError("word: adjoint of a scalar literal");
      }
      v = std::get<Morphism>(v).adjoint();
    }
    return v;
  }

  WordValue parse_primary() {
    const WordToken& tok = advance();
    switch (tok.type) {
      case WordToken::LParen: {
        WordValue v = parse_chain();
        if (advance().type != WordToken::RParen) {
          throw ParseError("word: missing ')'");
        }
        return v;
      }
      case WordToken::ScalarLit:
        return tok.scalar;
      case WordToken::Name:
        return resolve(tok.name);
      default:
        throw ParseError("word: expected a generator, '(' or a scalar literal");
    }
  }

  Morphism resolve(const std::string& name) {
    if (name.rfind("id_", 0) == 0) {
      const std::string digits = name.substr(3);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("word: malformed identity \"" + name + "\"");
      }
      return Morphism::identity(gens_.kind(), std::stoi(digits));
    }
    if (name == "u") return gens_.u();
    if (name == "m") return gens_.m();
    if (name == "e") {
      if (gens_.kind() != Kind::FC) {
        throw ParseError("word: generator e exists only in the FC category");
      }
      return gens_.e();
    }
    if (name == "f") {
      if (gens_.kind() != Kind::FC) {
        throw ParseError("word: generator f exists only in the FC category");
      }
      return gens_.f();
    }
    if ((name[0] == 'e' || name[0] == 'p') && name.size() > 1 &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int i = std::stoi(name.substr(1));
      if (i < 1 || i > gens_.max_index()) {
        throw ParseError("word: projection index out of range in \"" + name +
                         "\"");
      }
      if (name[0] == 'p' && gens_.kind() != Kind::FC) {
        throw ParseError("word: p projections exist only in the FC category");
      }
      return name[0] == 'e' ? gens_.jones_e(i) : gens_.jones_p(i);
    }
    throw ParseError("word: unknown name \"" + name + "\"");
  }
};

}  // namespace

Morphism evaluate_word(const std::string& word, const GeneratorSet& gens) {
  return WordParser(tokenize_word(word), gens).run();
}

namespace {

std::pair<Morphism, Morphism> pad_to_common(Morphism a, Morphism b) {
  if (a.kind() != b.kind()) {
    throw SignatureMismatch("cannot compare morphisms of different kinds");
  }
  const int dd = a.dom() - b.dom();
  const int dc = a.cod() - b.cod();
  if (dd != dc) {
    throw SignatureMismatch("sides cannot be padded to a common signature");
  }
  if (dd < 0) {
    a = a.tensor(Morphism::identity(a.kind(), -dd));
  } else if (dd > 0) {
    b = b.tensor(Morphism::identity(b.kind(), dd));
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

bool equal_padded(const Morphism& a, const Morphism& b) {
  const auto [pa, pb] = pad_to_common(a, b);
  return pa == pb;
}

int padded_difference_terms(const Morphism& a, const Morphism& b) {
  const auto [pa, pb] = pad_to_common(a, b);
  return static_cast<int>((pa - pb).terms().size());
}

Morphism frobenius_transport(const Morphism& x, int w) {
  const int l = x.dom();
  const int k = x.cod();
  if (w < l || w < k) {
    throw SignatureMismatch("transport width below max(dom, cod)");
  }
  const Kind kind = x.kind();
  const Morphism u = cup(kind);
  const Morphism left =
      tensor_power(kind, u, w - k).tensor(Morphism::identity(kind, k));
  const Morphism right = tensor_power(kind, u.adjoint(), w - l)
                             .tensor(Morphism::identity(kind, l));
  return left.compose(x).compose(right);
}

Morphism frobenius_inverse(const Morphism& y, int target_dom, int target_cod) {
  if (y.dom() != y.cod()) {
    throw SignatureMismatch("transport inverse expects a square signature");
  }
  const int w = y.dom();
  if (w < target_dom || w < target_cod) {
    throw SignatureMismatch("transport width below max(dom, cod)");
  }
  const Kind kind = y.kind();
  const Morphism u = cup(kind);
  const Morphism left = tensor_power(kind, u.adjoint(), w - target_cod)
                            .tensor(Morphism::identity(kind, target_cod));
  const Morphism right = tensor_power(kind, u, w - target_dom)
                             .tensor(Morphism::identity(kind, target_dom));
  return left.compose(y).compose(right);
}

}  // namespace diagcat
