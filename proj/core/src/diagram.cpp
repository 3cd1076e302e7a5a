#include "diagcat/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace diagcat {

std::string_view kind_name(Kind k) { return k == Kind::TL ? "TL" : "FC"; }

Kind parse_kind(const std::string& text) {
  if (text == "TL") return Kind::TL;
  if (text == "FC") return Kind::FC;
  throw ParseError("unknown diagram kind \"" + text + "\" (expected TL or FC)");
}

std::string to_string(const Signature& sig) {
  std::ostringstream out;
  out << kind_name(sig.kind) << " " << sig.dom << " -> " << sig.cod;
  return out.str();
}

Diagram::Diagram(Kind kind, int dom, int cod, std::vector<int> partner)
    : kind_(kind), dom_(dom), cod_(cod), partner_(std::move(partner)) {
  validate();
}

Diagram Diagram::identity(Kind kind, int n) {
  const int t = points_per_object(kind) * n;
  std::vector<int> partner(2 * t);
  for (int r = 0; r < t; ++r) {
    partner[r] = t + r;
    partner[t + r] = r;
  }
  return Diagram(kind, n, n, std::move(partner));
}

Diagram Diagram::from_pairs(Kind kind, int dom, int cod,
                            const std::vector<std::pair<int, int>>& pairs) {
  const int total = points_per_object(kind) * (dom + cod);
  std::vector<int> partner(total, -1);
  for (const auto& [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= total || y >= total) {
      throw InvalidDiagram("pair index out of range");
    }
    if (partner[x] != -1 || partner[y] != -1) {
      throw InvalidDiagram("point listed in more than one pair");
    }
    partner[x] = y;
    partner[y] = x;
  }
  for (int i = 0; i < total; ++i) {
    if (partner[i] == -1) throw InvalidDiagram("point left unmatched");
  }
  return Diagram(kind, dom, cod, std::move(partner));
}

void Diagram::validate() const {
  if (dom_ < 0 || cod_ < 0) throw InvalidDiagram("negative object count");
  const int total = total_points();
  if (static_cast<int>(partner_.size()) != total) {
    throw InvalidDiagram("partner table size does not match the signature");
  }
  for (int i = 0; i < total; ++i) {
    const int j = partner_[i];
    if (j < 0 || j >= total) throw InvalidDiagram("partner index out of range");
    if (j == i) throw InvalidDiagram("point paired with itself");
    if (partner_[j] != i) throw InvalidDiagram("pairing is not an involution");
    if (color_of(i) != color_of(j)) {
      throw InvalidDiagram("pair joins points of different colors");
    }
  }
  // Non-crossing in the circular order: top row left to right, bottom row
  // right to left.
  const int t = top_points();
  const int b = bottom_points();
  auto circ = [&](int i) { return i < t ? i : t + (b - 1 - (i - t)); };
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < total; ++i) {
    if (i < partner_[i]) {
      int lo = circ(i);
      int hi = circ(partner_[i]);
      if (lo > hi) std::swap(lo, hi);
      chords.push_back({lo, hi});
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto& [a1, b1] = chords[i];
      const auto& [a2, b2] = chords[j];
      const bool crossed = (a1 < a2 && a2 < b1 && b1 < b2) ||
                           (a2 < a1 && a1 < b2 && b2 < b1);
      if (crossed) throw InvalidDiagram("pairing has crossing strings");
    }
  }
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < total_points(); ++i) {
    if (i < partner_[i]) out.push_back({i, partner_[i]});
  }
  return out;
}

Color Diagram::color_of(int i) const {
  const int t = top_points();
  return point_color(kind_, i < t ? i : i - t);
}

Diagram Diagram::adjoint() const {
  const int t = top_points();
  const int b = bottom_points();
  auto flip = [&](int i) { return i < t ? b + i : i - t; };
  std::vector<int> partner(t + b);
  for (int i = 0; i < t + b; ++i) partner[flip(i)] = flip(partner_[i]);
  return Diagram(kind_, cod_, dom_, std::move(partner));
}

Diagram Diagram::tensor(const Diagram& a, const Diagram& b) {
  if (a.kind() != b.kind()) {
    throw SignatureMismatch("tensor of diagrams of different kinds");
  }
  const int ta = a.top_points();
  const int tb = b.top_points();
  const int ba = a.bottom_points();
  const int bb = b.bottom_points();
  const int t = ta + tb;
  auto map_a = [&](int i) { return i < ta ? i : t + (i - ta); };
  auto map_b = [&](int i) { return i < tb ? ta + i : t + ba + (i - tb); };
  std::vector<int> partner(t + ba + bb);
  for (int i = 0; i < ta + ba; ++i) partner[map_a(i)] = map_a(a.partner(i));
  for (int i = 0; i < tb + bb; ++i) partner[map_b(i)] = map_b(b.partner(i));
  return Diagram(a.kind(), a.dom() + b.dom(), a.cod() + b.cod(),
                 std::move(partner));
}

std::string Diagram::to_string() const {
  std::ostringstream out;
  out << kind_name(kind_) << " " << dom_ << " " << cod_ << " :";
  const int t = top_points();
  auto label = [&](int i) {
    std::ostringstream s;
    if (i < t) {
      s << "t" << (i + 1);
    } else {
      s << "b" << (i - t + 1);
    }
    return s.str();
  };
  bool first = true;
  for (const auto& [x, y] : pairs()) {
    out << (first ? " " : "") << "(" << label(x) << "," << label(y) << ")";
    first = false;
  }
  return out.str();
}

namespace {

struct DiagramLexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit DiagramLexer(const std::string& t) : text(t) {}

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool consume(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("diagram text: expected a word");
    return text.substr(start, pos - start);
  }

  int number() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("diagram text: expected a number");
    return std::stoi(text.substr(start, pos - start));
  }

  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError("diagram text: expected '" + std::string(1, c) + "'");
    }
    ++pos;
  }
};

int parse_point(DiagramLexer& lex, int top_count, int bottom_count) {
  lex.skip();
  if (lex.pos >= lex.text.size()) throw ParseError("diagram text: expected a point label");
  const char side = lex.text[lex.pos];
  if (side != 't' && side != 'b') {
    throw ParseError("diagram text: point labels start with 't' or 'b'");
  }
  ++lex.pos;
  const int idx = lex.number();
  const int row = side == 't' ? top_count : bottom_count;
  if (idx < 1 || idx > row) {
    throw ParseError("diagram text: point index out of range");
  }
  return side == 't' ? idx - 1 : top_count + idx - 1;
}

}  // namespace

Diagram Diagram::parse(const std::string& text) {
  DiagramLexer lex(text);
  const Kind kind = parse_kind(lex.word());
  const int dom = lex.number();
  const int cod = lex.number();
  lex.expect(':');
  const int t = points_per_object(kind) * dom;
  const int b = points_per_object(kind) * cod;
  std::vector<std::pair<int, int>> pairs;
  while (!lex.done()) {
    int x, y;
    if (lex.peek() == '(') {
      lex.expect('(');
      x = parse_point(lex, t, b);
      lex.expect(',');
      y = parse_point(lex, t, b);
      lex.expect(')');
    } else {
      x = parse_point(lex, t, b);
      lex.expect('-');
      y = parse_point(lex, t, b);
    }
    pairs.push_back({x, y});
    lex.consume(',');  // optional separator between pairs
  }
  return from_pairs(kind, dom, cod, pairs);
}

ComposeResult compose_raw(const Diagram& a, const Diagram& b) {
  if (a.kind() != b.kind()) {
    throw SignatureMismatch("compose of diagrams of different kinds");
  }
  if (a.dom() != b.cod()) {
    throw SignatureMismatch("compose: " + to_string(a.signature()) +
                            " after " + to_string(b.signature()));
  }
  const int glue = a.top_points();
  const int tb = b.top_points();
  const int ba = a.bottom_points();
  std::vector<char> glue_seen(glue, 0);

  // Outer labels: 0..tb-1 are b's top points, tb..tb+ba-1 are a's bottom
  // points; those survive in the composite.
  auto outer_walk = [&](int u) {
    bool in_b = u < tb;
    int p = in_b ? u : glue + (u - tb);
    while (true) {
      if (in_b) {
        const int q = b.partner(p);
        if (q < tb) return q;
        const int j = q - tb;
        glue_seen[j] = 1;
        in_b = false;
        p = j;
      } else {
        const int q = a.partner(p);
        if (q >= glue) return tb + (q - glue);
        glue_seen[q] = 1;
        in_b = true;
        p = tb + q;
      }
    }
  };

  std::vector<int> partner(tb + ba, -1);
  for (int u = 0; u < tb + ba; ++u) {
    if (partner[u] != -1) continue;
    const int v = outer_walk(u);
    partner[u] = v;
    partner[v] = u;
  }

  // Strands never touched from the boundary close up into loops; walk each
  // one once, checking it stays monochrome.
  int white_loops = 0;
  int black_loops = 0;
  for (int s = 0; s < glue; ++s) {
    if (glue_seen[s]) continue;
    const Color col = point_color(a.kind(), s);
    int cur = s;
    do {
      glue_seen[cur] = 1;
      const int r = a.partner(cur);
      if (r >= glue || point_color(a.kind(), r) != col) {
        throw InvalidDiagram("malformed loop in composition");
      }
      glue_seen[r] = 1;
      const int q = b.partner(tb + r);
      if (q < tb || point_color(a.kind(), q - tb) != col) {
        throw InvalidDiagram("malformed loop in composition");
      }
      cur = q - tb;
    } while (cur != s);
    ++(col == Color::White ? white_loops : black_loops);
  }

  return {Diagram(a.kind(), b.dom(), a.cod(), std::move(partner)), white_loops,
          black_loops};
}

Diagram tl_to_fc(const Diagram& d) {
  if (d.kind() != Kind::TL) {
    throw SignatureMismatch("tl_to_fc expects a TL diagram");
  }
  const int tt = d.top_points();
  const int bt = d.bottom_points();
  const int tf = 2 * tt;
  const int bf = 2 * bt;
  auto tl_circ = [&](int i) { return i < tt ? i : tt + (bt - 1 - (i - tt)); };
  auto fc_lin = [&](int c) { return c < tf ? c : tf + (bf - 1 - (c - tf)); };
  std::vector<std::pair<int, int>> out;
  for (const auto& [x, y] : d.pairs()) {
    int ca = tl_circ(x);
    int cb = tl_circ(y);
    if (ca > cb) std::swap(ca, cb);
    out.push_back({fc_lin(2 * ca + 1), fc_lin(2 * cb)});
    out.push_back({fc_lin(2 * ca), fc_lin(2 * cb + 1)});
  }
  return Diagram::from_pairs(Kind::FC, d.dom(), d.cod(), out);
}

}  // namespace diagcat
