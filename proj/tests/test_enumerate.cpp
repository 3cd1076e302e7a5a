#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <diagcat/diagram.hpp>
#include <diagcat/enumerate.hpp>
#include <diagcat/errors.hpp>

using diagcat::Diagram;
using diagcat::Kind;
using diagcat::dimension;
using diagcat::enumerate_diagrams;

namespace {

// Exhaustive oracle: try every fixed-point-free involution on the boundary
// points and keep the ones the Diagram constructor accepts.
long long brute_force_count(Kind kind, int dom, int cod) {
  const int total = diagcat::points_per_object(kind) * (dom + cod);
  std::vector<int> partner(total, -1);
  long long count = 0;
  auto rec = [&](auto&& self, int i) -> void {
    while (i < total && partner[i] != -1) ++i;
    if (i == total) {
      try {
        Diagram d(kind, dom, cod, partner);
        ++count;
      } catch (const diagcat::InvalidDiagram&) {
      }
      return;
    }
    for (int j = i + 1; j < total; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = j;
      partner[j] = i;
      self(self, i + 1);
      partner[i] = -1;
      partner[j] = -1;
    }
  };
  rec(rec, 0);
  return count;
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST_CASE("TL dimensions are Catalan numbers") {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(dimension(Kind::TL, m, n) == catalan(m + n));
    }
  }
  CHECK(dimension(Kind::TL, 4, 4) == 1430);
}

TEST_CASE("FC dimensions depend only on the total object count") {
  // 1, 1, 3, 12, 55, 273, 1428 ternary trees with m+n internal nodes.
  const long long expected[] = {1, 1, 3, 12, 55, 273, 1428};
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(dimension(Kind::FC, m, n) == expected[m + n]);
    }
  }
}

TEST_CASE("enumeration matches the counting formula") {
  for (Kind kind : {Kind::TL, Kind::FC}) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 2; ++n) {
        CAPTURE(kind == Kind::TL);
        CAPTURE(m);
        CAPTURE(n);
        const auto all = enumerate_diagrams(kind, m, n);
        CHECK(static_cast<long long>(all.size()) == dimension(kind, m, n));
      }
    }
  }
  CHECK(enumerate_diagrams(Kind::FC, 2, 2).size() == 55);
}

TEST_CASE("enumeration is sorted and duplicate free") {
  for (Kind kind : {Kind::TL, Kind::FC}) {
    const auto all = enumerate_diagrams(kind, 2, 1);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const Diagram& d : all) {
      CHECK(d.dom() == 2);
      CHECK(d.cod() == 1);
    }
  }
}

TEST_CASE("enumeration agrees with the brute force oracle") {
  for (Kind kind : {Kind::TL, Kind::FC}) {
    const int top = kind == Kind::TL ? 2 : 1;
    for (int m = 0; m <= top; ++m) {
      for (int n = 0; n <= top; ++n) {
        CAPTURE(kind == Kind::TL);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(static_cast<long long>(enumerate_diagrams(kind, m, n).size()) ==
              brute_force_count(kind, m, n));
      }
    }
  }
  CHECK(static_cast<long long>(enumerate_diagrams(Kind::FC, 1, 2).size()) ==
        brute_force_count(Kind::FC, 1, 2));
}

TEST_CASE("small signatures by hand") {
  CHECK(enumerate_diagrams(Kind::TL, 0, 0).size() == 1);
  CHECK(enumerate_diagrams(Kind::TL, 0, 0)[0] ==
        Diagram::identity(Kind::TL, 0));

  // TL 1 -> 1 has only the identity... and nothing else: Catalan(2) = 2
  // counts the cap-cup diagram too.
  const auto tl11 = enumerate_diagrams(Kind::TL, 1, 1);
  REQUIRE(tl11.size() == 2);
  CHECK(std::find(tl11.begin(), tl11.end(), Diagram::identity(Kind::TL, 1)) !=
        tl11.end());

  // FC 0 -> 1 is the single fully nested cup family member.
  const auto fc01 = enumerate_diagrams(Kind::FC, 0, 1);
  REQUIRE(fc01.size() == 1);
  CHECK(fc01[0] ==
        Diagram::from_pairs(Kind::FC, 0, 1, {{0, 3}, {1, 2}}));
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(dimension(Kind::TL, 10, 10), diagcat::BudgetExceeded);
  CHECK_THROWS_AS(enumerate_diagrams(Kind::FC, 4, 5),
                  diagcat::BudgetExceeded);
  CHECK_NOTHROW(dimension(Kind::TL, 10, 10, 64));
  CHECK(dimension(Kind::TL, 8, 8, 64) == catalan(16));
}
