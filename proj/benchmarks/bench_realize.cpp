#include "arens/algebra.hpp"
#include "arens/identities.hpp"
#include "arens/semantics.hpp"

#include <benchmark/benchmark.h>

using namespace arens;

namespace {

MultiMap cube(std::size_t d) {
  RandomMapOptions o;
  o.input_dims = {d, d, d};
  o.codomain_dim = d;
  o.seed = 1;
  return random_map(o);
}

void BM_RealizeExtension(benchmark::State& state) {
  const MultiMap f = cube(static_cast<std::size_t>(state.range(0)));
  const ExprAst e = parse("f^{t****s}");
  for (auto _ : state) benchmark::DoNotOptimize(realize(e, f));
  state.SetComplexityN(static_cast<long>(f.entries().size()));
}
BENCHMARK(BM_RealizeExtension)->DenseRange(2, 6)->Complexity();

void BM_CompleteRegularity(benchmark::State& state) {
  const MultiMap f = cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complete_regularity(f).completely_regular());
}
BENCHMARK(BM_CompleteRegularity)->DenseRange(2, 6);

void BM_Classify(benchmark::State& state) {
  const ExprAst a = parse("f^{i****i}");
  const ExprAst b = parse("f^{rs****t}");
  for (auto _ : state) benchmark::DoNotOptimize(classify(a, b));
}
BENCHMARK(BM_Classify);

void BM_GroupTriple(benchmark::State& state) {
  const CayleyTable s3 = CayleyTable::fixture("s3");
  for (auto _ : state) benchmark::DoNotOptimize(complete_regularity(group_algebra(s3).triple).completely_regular());
}
BENCHMARK(BM_GroupTriple);

}  // namespace

BENCHMARK_MAIN();
