#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <diagcat/algebra.hpp>
#include <diagcat/enumerate.hpp>
#include <diagcat/errors.hpp>
#include <diagcat/scalar.hpp>
#include <diagcat/trace.hpp>

using diagcat::Diagram;
using diagcat::GeneratorSet;
using diagcat::GramNumeric;
using diagcat::GramSymbolic;
using diagcat::Kind;
using diagcat::Morphism;
using diagcat::Scalar;
using diagcat::closure_vector;
using diagcat::enumerate_diagrams;
using diagcat::evaluate_word;
using diagcat::gram_numeric;
using diagcat::gram_symbolic;
using diagcat::markov_close;

namespace {

// Direct trace oracle: close a single square diagram by joining top point i
// to bottom point i and weigh the resulting monochrome cycles.
Scalar direct_closure(const Diagram& d) {
  const int t = d.top_points();
  REQUIRE(d.bottom_points() == t);
  std::vector<char> seen(2 * t, 0);
  int white = 0;
  int black = 0;
  for (int s = 0; s < 2 * t; ++s) {
    if (seen[s]) continue;
    const diagcat::Color col = d.color_of(s);
    int cur = s;
    do {
      seen[cur] = 1;
      const int nxt = d.partner(cur);
      seen[nxt] = 1;
      REQUIRE(d.color_of(nxt) == col);
      cur = nxt < t ? nxt + t : nxt - t;  // jump across the closure arc
    } while (cur != s);
    ++(col == diagcat::Color::White ? white : black);
  }
  if (d.kind() == Kind::TL) {
    return Scalar::delta_pow(2 * (white + black));
  }
  return Scalar::monomial(1, 2 * white, 2 * black);
}

Scalar direct_closure(const Morphism& x) {
  Scalar total = Scalar::zero();
  for (const auto& [d, c] : x.terms()) total += c * direct_closure(d);
  return total;
}

Morphism random_morphism(Kind kind, int n, unsigned seed) {
  const auto basis = enumerate_diagrams(kind, n, n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Morphism x = Morphism::zero(kind, n, n);
  for (const Diagram& d : basis) {
    x = x + Morphism::of(d, Scalar::integer(coeff(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("closure vector") {
  for (Kind kind : {Kind::TL, Kind::FC}) {
    const Morphism v = closure_vector(kind);
    CHECK(v.dom() == 0);
    CHECK(v.cod() == 2);
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms().begin()->second == Scalar::one());
  }
}

TEST_CASE("markov trace of identities") {
  // Closing the identity on n objects gives 2n loops of each relevant kind,
  // totalling delta^(2n).
  for (Kind kind : {Kind::TL, Kind::FC}) {
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(markov_close(Morphism::identity(kind, n)) ==
            Scalar::delta_pow(4 * n));
    }
  }
}

TEST_CASE("markov trace of the colored projections") {
  const GeneratorSet gens = GeneratorSet::build(Kind::FC, 4);
  // tr(e) = beta^2: the black cap closes against its cup, the two white
  // through strands close into loops.
  CHECK(markov_close(gens.e()) == Scalar::beta_pow(4));
  // Closing f gives three white and four black loops on the raw diagram,
  // and f carries 1/beta: tr(f) = beta^2 omega^4.
  CHECK(markov_close(gens.f()) ==
        Scalar::beta_pow(4) * Scalar::omega_pow(8));
  // Unnormalized the Jones projections trace to delta^(2w - 2) at width w.
  CHECK(markov_close(gens.jones_e(1)) == Scalar::one());
  CHECK(markov_close(gens.jones_e(2)) == Scalar::delta_pow(4));
}

TEST_CASE("markov trace agrees with the direct closure") {
  for (Kind kind : {Kind::TL, Kind::FC}) {
    for (int n = 1; n <= 2; ++n) {
      for (unsigned seed = 1; seed <= 3; ++seed) {
        CAPTURE(n);
        CAPTURE(seed);
        const Morphism x = random_morphism(kind, n, seed);
        CHECK(markov_close(x) == direct_closure(x));
      }
    }
  }
}

TEST_CASE("markov trace is tracial") {
  const GeneratorSet gens = GeneratorSet::build(Kind::FC, 4);
  const Morphism x = random_morphism(Kind::FC, 2, 11);
  const Morphism y = random_morphism(Kind::FC, 2, 12);
  CHECK(markov_close(x.compose(y)) == markov_close(y.compose(x)));

  const Morphism a = evaluate_word("e1 . p2", gens);
  const Morphism b = evaluate_word("p2 . e1", gens);
  CHECK(markov_close(a) == markov_close(b));
}

TEST_CASE("markov trace needs a square signature") {
  const GeneratorSet gens = GeneratorSet::build(Kind::FC, 4);
  CHECK_THROWS_AS(markov_close(gens.u()), diagcat::SignatureMismatch);
  CHECK_THROWS_AS(markov_close(gens.m()), diagcat::SignatureMismatch);
}

TEST_CASE("symbolic gram matrix") {
  const GramSymbolic g = gram_symbolic(Kind::TL, 1, 1);
  REQUIRE(g.basis.size() == 2);
  // Basis: cap-cup diagram and the identity, in enumeration order.
  // tr(id* id) = delta^2, tr(capcup* capcup) = delta^2, cross terms delta.
  int id_at = g.basis[0] == Diagram::identity(Kind::TL, 1) ? 0 : 1;
  const int cc = 1 - id_at;
  CHECK(g.entries[id_at][id_at] == Scalar::delta_pow(4));
  CHECK(g.entries[cc][cc] == Scalar::delta_pow(4));
  CHECK(g.entries[id_at][cc] == Scalar::delta_pow(2));
  CHECK(g.entries[cc][id_at] == Scalar::delta_pow(2));
}

TEST_CASE("gram matrices are symmetric") {
  for (Kind kind : {Kind::TL, Kind::FC}) {
    const GramSymbolic g = gram_symbolic(kind, 0, 2);
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
      for (std::size_t j = 0; j < g.basis.size(); ++j) {
        CHECK(g.entries[i][j] == g.entries[j][i]);
      }
    }
  }
}

TEST_CASE("numeric gram at a generic point is positive definite") {
  const GramNumeric g = gram_numeric(Kind::TL, 1, 1, 2.0, 2.0);
  REQUIRE(g.basis.size() == 2);
  // delta = 4: matrix [[16, 4], [4, 16]].
  CHECK(g.matrix(0, 0) == doctest::Approx(16.0));
  CHECK(g.matrix(0, 1) == doctest::Approx(4.0));
  CHECK(g.min_eigenvalue == doctest::Approx(12.0));
  CHECK(g.max_eigenvalue == doctest::Approx(20.0));
  CHECK(g.rank == 2);
  CHECK(g.positive_semidefinite);

  const GramNumeric fc = gram_numeric(Kind::FC, 1, 1, 2.0, 2.0);
  CHECK(fc.rank == 3);
  CHECK(fc.positive_semidefinite);
  CHECK(fc.min_eigenvalue > 0.0);
}

TEST_CASE("numeric gram degenerates at small parameters") {
  // At beta = omega = sqrt(2) the form on FC(2, 2) has nontrivial kernel.
  const double r2 = std::sqrt(2.0);
  const GramNumeric g = gram_numeric(Kind::FC, 2, 2, r2, r2, 1e-9);
  CHECK(g.basis.size() == 55);
  CHECK(g.rank < 55);
  CHECK(g.positive_semidefinite);
}

TEST_CASE("gram respects the budget") {
  CHECK_THROWS_AS(gram_symbolic(Kind::FC, 4, 5), diagcat::BudgetExceeded);
  CHECK_THROWS_AS(gram_numeric(Kind::TL, 9, 9, 2.0, 2.0),
                  diagcat::BudgetExceeded);
}
