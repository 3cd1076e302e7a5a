#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagcat/errors.hpp"

namespace diagcat {

// TL diagrams pair 2 points per object, FC diagrams pair 4 bicolored points
// per object.
enum class Kind { TL, FC };

constexpr int points_per_object(Kind k) { return k == Kind::TL ? 2 : 4; }

std::string_view kind_name(Kind k);
Kind parse_kind(const std::string& text);

enum class Color { White, Black };

// Color of the point at position r within a row.  FC rows repeat the pattern
// white, black, black, white; TL strings are uncolored and count as white.
constexpr Color point_color(Kind k, int r) {
  if (k == Kind::TL) return Color::White;
  int q = r % 4;
  return (q == 0 || q == 3) ? Color::White : Color::Black;
}

struct Signature {
  Kind kind;
  int dom;
  int cod;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

// A planar matching of the points on the boundary of a rectangle: dom objects
// worth of points on the top edge, cod objects worth on the bottom edge.
// Points are indexed 0..T-1 along the top row and T..T+B-1 along the bottom
// row.  The matching must be a fixed-point-free involution, non-crossing in
// the circular order (top left to right, then bottom right to left), and may
// only join points of equal color.
class Diagram {
 public:
  Diagram(Kind kind, int dom, int cod, std::vector<int> partner);

  static Diagram identity(Kind kind, int n);
  static Diagram from_pairs(Kind kind, int dom, int cod,
                            const std::vector<std::pair<int, int>>& pairs);

  Kind kind() const { return kind_; }
  int dom() const { return dom_; }
  int cod() const { return cod_; }
  Signature signature() const { return {kind_, dom_, cod_}; }

  int top_points() const { return points_per_object(kind_) * dom_; }
  int bottom_points() const { return points_per_object(kind_) * cod_; }
  int total_points() const { return top_points() + bottom_points(); }

  int partner(int i) const { return partner_[i]; }
  const std::vector<int>& partners() const { return partner_; }

  // Pairs as (low index, high index), sorted by low index.
  std::vector<std::pair<int, int>> pairs() const;

  Color color_of(int i) const;

  Diagram adjoint() const;
  static Diagram tensor(const Diagram& a, const Diagram& b);

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

  // Canonical text, e.g. "FC 2 1 : (t1,b1)(t2,t5)(t3,t4)".  Points are
  // 1-based within their row and prefixed t (top) or b (bottom).
  std::string to_string() const;

  // Accepts the canonical tuple form and the dash form "t1-b1, t2-t5, ...".
  static Diagram parse(const std::string& text);

 private:
  Kind kind_;
  int dom_;
  int cod_;
  std::vector<int> partner_;

  void validate() const;
};

struct ComposeResult {
  Diagram diagram;
  int white_loops;
  int black_loops;
};

// Composite a after b (stack b on top of a, glue b's bottom row to a's top
// row).  Closed strands removed from the middle are returned as loop counts
// by color; no loop weight is applied here.
ComposeResult compose_raw(const Diagram& a, const Diagram& b);

// Doubling embedding: each TL string splits into a white/black parallel pair,
// giving an FC diagram with the same object counts.
Diagram tl_to_fc(const Diagram& d);

}  // namespace diagcat
