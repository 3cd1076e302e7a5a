#include <benchmark/benchmark.h>

#include <diagcat/algebra.hpp>
#include <diagcat/diagram.hpp>
#include <diagcat/enumerate.hpp>
#include <diagcat/relations.hpp>
#include <diagcat/trace.hpp>

using namespace diagcat;

static void BM_EnumerateTL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_diagrams(Kind::TL, n, n));
  }
}
BENCHMARK(BM_EnumerateTL)->Arg(2)->Arg(3)->Arg(4);

static void BM_EnumerateFC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_diagrams(Kind::FC, n, n));
  }
}
BENCHMARK(BM_EnumerateFC)->Arg(1)->Arg(2)->Arg(3);

static void BM_DimensionFC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dimension(Kind::FC, n, n));
  }
}
BENCHMARK(BM_DimensionFC)->Arg(2)->Arg(4);

// Raw diagram composition over every pair of one signature, loops included.
static void BM_ComposePairsFC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = enumerate_diagrams(Kind::FC, n, n);
  for (auto _ : state) {
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        benchmark::DoNotOptimize(compose_raw(a, b));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(basis.size() * basis.size()));
}
BENCHMARK(BM_ComposePairsFC)->Arg(1)->Arg(2);

static void BM_WordEvaluation(benchmark::State& state) {
  const GeneratorSet gens = GeneratorSet::build(Kind::FC, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate_word("p1 . p2 . p3 . p4 . p3 . p2 . p1", gens));
  }
}
BENCHMARK(BM_WordEvaluation);

static void BM_MarkovClose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratorSet gens = GeneratorSet::build(Kind::FC, 2 * n);
  std::string word = "p1";
  for (int i = 2; i <= 2 * n - 1; ++i) {
    word += " . p" + std::to_string(i);
  }
  const Morphism x = evaluate_word(word, gens);
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov_close(x));
  }
}
BENCHMARK(BM_MarkovClose)->Arg(2)->Arg(3);

static void BM_GramSymbolicFC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_symbolic(Kind::FC, n, n));
  }
}
BENCHMARK(BM_GramSymbolicFC)->Arg(1)->Arg(2);

static void BM_GramNumericFC22(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_numeric(Kind::FC, 2, 2, 2.0, 2.0));
  }
}
BENCHMARK(BM_GramNumericFC22);

static void BM_VerifySuite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_suite("BJ", 4));
  }
}
BENCHMARK(BM_VerifySuite);

BENCHMARK_MAIN();
