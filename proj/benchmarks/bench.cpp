#include <benchmark/benchmark.h>

#include "ffhyper/admissible.hpp"
#include "ffhyper/bounds.hpp"
#include "ffhyper/hypergraph.hpp"
#include "ffhyper/parse.hpp"

namespace {

using namespace ffhyper;

void BM_FieldMulExtension(benchmark::State& state) {
  const auto F = Field::create(3, 7);
  Elem x{5};
  const Elem g = F->generator();
  for (auto _ : state) {
    x = F->mul(x, g);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMulExtension);

void BM_PrimitiveDensity(benchmark::State& state) {
  const auto F = Field::create(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(primitive_density_deg2_var3(F));
}
BENCHMARK(BM_PrimitiveDensity)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BuildHypergraph(benchmark::State& state) {
  const auto f = parse_poly(Field::create(static_cast<std::uint32_t>(state.range(0))), "x1*x2*x3+1");
  for (auto _ : state) benchmark::DoNotOptimize(Hypergraph::build(f));
}
BENCHMARK(BM_BuildHypergraph)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_EpoDirect(benchmark::State& state) {
  const auto y = Hypergraph::build(parse_poly(Field::create(static_cast<std::uint32_t>(state.range(0))), "x1*x2+1"));
  for (auto _ : state) benchmark::DoNotOptimize(count_epo_direct(y));
}
BENCHMARK(BM_EpoDirect)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

void BM_Charsum(benchmark::State& state) {
  const auto y = Hypergraph::build(parse_poly(Field::create(13), "x1*x2+1"));
  const auto method = state.range(0) ? CharsumMethod::naive : CharsumMethod::factored;
  for (auto _ : state) benchmark::DoNotOptimize(count_epo_charsum(y, method));
}
BENCHMARK(BM_Charsum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Triples(benchmark::State& state) {
  const auto y = Hypergraph::build(parse_poly(Field::create(static_cast<std::uint32_t>(state.range(0))), "x1*x2+1"));
  for (auto _ : state) benchmark::DoNotOptimize(count_m_subsets(y, 3));
}
BENCHMARK(BM_Triples)->Arg(101)->Arg(151)->Unit(benchmark::kMillisecond);

void BM_Omega(benchmark::State& state) {
  const auto y = Hypergraph::build(parse_poly(Field::create(static_cast<std::uint32_t>(state.range(0))), "x1*x2+1"));
  for (auto _ : state) benchmark::DoNotOptimize(omega_clique(y));
}
BENCHMARK(BM_Omega)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_ExceptionalX(benchmark::State& state) {
  const auto f = parse_poly(Field::create(13), "x1^2+x2^2+x3^2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_X(f));
}
BENCHMARK(BM_ExceptionalX)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
