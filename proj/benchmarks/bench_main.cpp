#include <benchmark/benchmark.h>

#include <random>

#include "ordcalc/parser.hpp"
#include "ordcalc/poset.hpp"
#include "ordcalc/testgen.hpp"
#include "ordcalc/width.hpp"

using namespace ordcalc;

namespace {

std::vector<Ordinal> strategy_input() {
  return {parse_ordinal("w^(w*2)*3 + w^w*2 + w"), parse_ordinal("w^w*4 + w^3*2 + w^2"),
          parse_ordinal("w^(w + 1)*2 + w*3")};
}

void BM_NatProd(benchmark::State& state) {
  std::mt19937 rng(1);
  OrdinalGen gen;
  gen.max_depth = 2;
  gen.max_terms = 4;
  std::vector<Ordinal> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(gen(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nat_prod(pool[i % 64], pool[(i + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_NatProd);

void BM_WidthPlain(benchmark::State& state) {
  const auto input = strategy_input();
  for (auto _ : state) {
    benchmark::DoNotOptimize(width_infinite_product(input, Strategy::Plain));
  }
}
BENCHMARK(BM_WidthPlain);

void BM_WidthDeveloped(benchmark::State& state) {
  const auto input = strategy_input();
  for (auto _ : state) {
    benchmark::DoNotOptimize(width_infinite_product(input, Strategy::Developed));
  }
}
BENCHMARK(BM_WidthDeveloped);

void BM_WidthMeta(benchmark::State& state) {
  const auto input = strategy_input();
  for (auto _ : state) {
    benchmark::DoNotOptimize(width_infinite_product(input, Strategy::Meta));
  }
}
BENCHMARK(BM_WidthMeta);

void BM_FiniteWidth(benchmark::State& state) {
  const std::vector<BigInt> ks(static_cast<std::size_t>(state.range(0)), BigInt(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(width_finite_product(ks));
  }
}
BENCHMARK(BM_FiniteWidth)->Arg(10)->Arg(50)->Arg(200);

void BM_MaxAntichain(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  FinitePoset p = grid_poset({k, k, k});
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_antichain(p));
  }
}
BENCHMARK(BM_MaxAntichain)->Arg(4)->Arg(8);

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_expr("star(G2) x (w^w*3 + w^2 + 5) x w ++ G7 x w^(w*2)"));
  }
}
BENCHMARK(BM_Parse);

}  // namespace

BENCHMARK_MAIN();
