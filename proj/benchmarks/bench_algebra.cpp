#include <benchmark/benchmark.h>

#include "basym/asymptote.hpp"
#include "basym/groebner.hpp"
#include "basym/homalg.hpp"

namespace {

using namespace basym;

RingPtr xyz() {
  auto g = make_group(1);
  return make_ring(PrimeField(), {"x", "y", "z"}, {Degree(g, {1}), Degree(g, {1}), Degree(g, {1})},
                   PositivityFunctional::all_ones(1));
}

std::vector<Polynomial> ci(const RingPtr& r) {
  return {parse_polynomial(r, "x^2+y^2+z^2"), parse_polynomial(r, "x^5+2*y^5+3*z^5"),
          parse_polynomial(r, "x^8+4*y^8+9*z^8")};
}

void BM_Buchberger(benchmark::State& state) {
  auto r = xyz();
  const auto f = ci(r);
  std::vector<Polynomial> gens;
  for (const auto& g : f) gens.push_back(g.pow(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_ideal(gens));
}
BENCHMARK(BM_Buchberger)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& state) {
  auto r = xyz();
  const auto f = ci(r);
  std::vector<Polynomial> sq;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i; j < f.size(); ++j) sq.push_back(f[i] * f[j]);
  const Presentation p = cyclic_presentation(r, sq);
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(p, 3));
}
BENCHMARK(BM_Resolution)->Unit(benchmark::kMillisecond);

// Rees module, resolution over S[T], fiber complex and support decompositions.
void BM_Pipeline(benchmark::State& state) {
  auto r = xyz();
  const Presentation S = free_presentation(ring_as_module(r));
  const ReesSetup st = make_rees_setup(r, {ci(r)});
  const auto ell = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    TorPipeline pipe(S, st, ell);
    benchmark::DoNotOptimize(pipe.shape(ell));
  }
}
BENCHMARK(BM_Pipeline)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
