#include <benchmark/benchmark.h>

#include <random>

#include "sylow/caps.hpp"
#include "sylow/verify.hpp"

using namespace sylow;

namespace {

MultiPoly random_poly(const FieldPtr& F, int n, int terms, int maxe, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    Term term{};
    for (int v = 0; v < n; ++v) term.m.e[v] = rng() % (maxe + 1);
    term.c = static_cast<Elem>(1 + rng() % (F->size() - 1));
    t.push_back(term);
  }
  return MultiPoly::from_terms(F, n, t);
}

template <bool Parallel>
void BM_Mul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const FieldPtr F = Field::make(2, 2);
  const MultiPoly a = random_poly(F, 6, state.range(0), 8, rng), b = random_poly(F, 6, state.range(0), 8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? mul_parallel(a, b) : mul_serial(a, b));
}

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  const GroupSpec spec = make_spec(Family::OPlus, 3, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? enumerate_group(spec, caps().enumeration)
                                      : enumerate_group_serial(spec, caps().enumeration));
}

template <bool Parallel>
void BM_Oracle(benchmark::State& state) {
  const GroupSpec spec = make_spec(Family::GuEven, 2, 2);
  const auto gens = generators(spec, false);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? oracle_min_degree(spec.field, gens, 4, 6)
                                      : oracle_min_degree_serial(spec.field, gens, 4, 6));
}

}  // namespace

BENCHMARK(BM_Mul<false>)->Arg(100)->Arg(400);
BENCHMARK(BM_Mul<true>)->Arg(100)->Arg(400);
BENCHMARK(BM_Enumerate<false>);
BENCHMARK(BM_Enumerate<true>);
BENCHMARK(BM_Oracle<false>);
BENCHMARK(BM_Oracle<true>);

BENCHMARK_MAIN();
