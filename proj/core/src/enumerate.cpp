#include "diagcat/enumerate.hpp"

#include <algorithm>
#include <sstream>

namespace diagcat {

namespace {

void check_budget(Kind kind, int dom, int cod, int budget_points) {
  if (dom < 0 || cod < 0) throw InvalidDiagram("negative object count");
  const int total = points_per_object(kind) * (dom + cod);
  if (total > budget_points) {
    std::ostringstream msg;
    msg << "signature " << kind_name(kind) << " " << dom << " -> " << cod
        << " has " << total << " boundary points, over the budget of "
        << budget_points;
    throw BudgetExceeded(msg.str());
  }
}

// Color of the point at circular position c (top row left to right, then
// bottom row right to left).
Color circ_color(Kind kind, int t, int b, int c) {
  const int lin = c < t ? c : t + (b - 1 - (c - t));
  return point_color(kind, lin < t ? lin : lin - t);
}

// Recursively match a contiguous arc of circular positions.  The first
// position must match another at odd offset (so both enclosed gaps have even
// size) and of equal color.
void match_arc(Kind kind, int t, int b, const std::vector<int>& arc,
               std::vector<std::pair<int, int>>& acc,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  if (arc.empty()) {
    out.push_back(acc);
    return;
  }
  const int first = arc[0];
  for (std::size_t j = 1; j < arc.size(); j += 2) {
    if (circ_color(kind, t, b, first) != circ_color(kind, t, b, arc[j])) continue;
    acc.push_back({first, arc[j]});
    std::vector<int> inside(arc.begin() + 1, arc.begin() + j);
    std::vector<int> outside(arc.begin() + j + 1, arc.end());
    const std::size_t mark = acc.size();
    std::vector<std::vector<std::pair<int, int>>> inner;
    std::vector<std::pair<int, int>> inner_acc;
    match_arc(kind, t, b, inside, inner_acc, inner);
    for (const auto& in_pairs : inner) {
      acc.insert(acc.end(), in_pairs.begin(), in_pairs.end());
      match_arc(kind, t, b, outside, acc, out);
      acc.resize(mark);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(Kind kind, int dom, int cod,
                                        int budget_points) {
  check_budget(kind, dom, cod, budget_points);
  const int t = points_per_object(kind) * dom;
  const int b = points_per_object(kind) * cod;
  const int total = t + b;
  std::vector<Diagram> result;
  if (total % 2 != 0) return result;
  if (total == 0) {
    result.push_back(Diagram(kind, dom, cod, {}));
    return result;
  }
  std::vector<int> arc(total);
  for (int i = 0; i < total; ++i) arc[i] = i;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> acc;
  match_arc(kind, t, b, arc, acc, matchings);

  auto lin = [&](int c) { return c < t ? c : t + (b - 1 - (c - t)); };
  for (const auto& pairs : matchings) {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(pairs.size());
    for (const auto& [x, y] : pairs) mapped.push_back({lin(x), lin(y)});
    result.push_back(Diagram::from_pairs(kind, dom, cod, mapped));
  }
  std::sort(result.begin(), result.end());
  return result;
}

long long dimension(Kind kind, int dom, int cod, int budget_points) {
  check_budget(kind, dom, cod, budget_points);
  const int t = points_per_object(kind) * dom;
  const int b = points_per_object(kind) * cod;
  const int total = t + b;
  if (total % 2 != 0) return 0;
  if (total == 0) return 1;

  // count[start][len]: matchings of the arc of circular positions
  // start..start+len-1.
  std::vector<std::vector<long long>> memo(
      total + 1, std::vector<long long>(total + 1, -1));
  auto count = [&](auto&& self, int start, int len) -> long long {
    if (len == 0) return 1;
    if (len % 2 != 0) return 0;
    long long& slot = memo[start][len];
    if (slot >= 0) return slot;
    long long acc = 0;
    const Color col = circ_color(kind, t, b, start);
    for (int j = 1; j < len; j += 2) {
      if (circ_color(kind, t, b, start + j) != col) continue;
      acc += self(self, start + 1, j - 1) * self(self, start + j + 1, len - j - 1);
    }
    slot = acc;
    return acc;
  };
  return count(count, 0, total);
}

}  // namespace diagcat
