// Serial vs OpenMP paths of the hot kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "mvlogic/canonical.hpp"
#include "mvlogic/generators.hpp"
#include "mvlogic/kernels.hpp"
#include "mvlogic/semantics.hpp"

using namespace mvlogic;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

AlgebraPtr luk(std::size_t n) { return TruthAlgebra::chain(AlgebraKind::lukasiewicz, n); }

void BM_Lift1Batch(benchmark::State& state) {
  auto alg = luk(5);
  const std::size_t rows = 64, cols = 64, count = 4096;
  std::mt19937_64 rng(1);
  std::vector<Degree> rel(rows * cols), in(count * rows), out(count * cols);
  for (auto& v : rel) v = rng() % 5;
  for (auto& v : in) v = rng() % 5;
  for (auto _ : state) {
    kernels::lift1_batch(*alg, rel, rows, cols, in, count, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_Lift0Batch(benchmark::State& state) {
  auto alg = luk(5);
  const std::size_t rows = 64, cols = 64, count = 4096;
  std::mt19937_64 rng(2);
  std::vector<Degree> rel(rows * cols), in(count * cols), out(count * rows);
  for (auto& v : rel) v = rng() % 5;
  for (auto& v : in) v = rng() % 5;
  for (auto _ : state) {
    kernels::lift0_batch(*alg, rel, rows, cols, in, count, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_EnumerateConcepts(benchmark::State& state) {
  Rng rng(3);
  Context c = random_context(rng, luk(4), 6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_concepts(c, {}, exec_of(state)).size());
}

void BM_SequentValid(benchmark::State& state) {
  Rng rng(4);
  FramePtr f = random_compatible_frame(rng, luk(4), FrameShape{6, 6});
  ComplexAlgebra alg(f);
  const Sequent s = parse_sequent("box (p & q) & dia r |- dia (p & r) | box q");
  for (auto _ : state) benchmark::DoNotOptimize(sequent_valid(alg, s, {}, exec_of(state)).valid);
  state.counters["concepts"] = static_cast<double>(alg.size());
}

void BM_EnumerateFilters(benchmark::State& state) {
  ModalLattice L = ModalLattice::chain(6);
  auto alg = luk(6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_filters(L, *alg, {}, exec_of(state)).size());
}

}  // namespace

BENCHMARK(BM_Lift1Batch)->Arg(0)->Arg(1);
BENCHMARK(BM_Lift0Batch)->Arg(0)->Arg(1);
BENCHMARK(BM_EnumerateConcepts)->Arg(0)->Arg(1);
BENCHMARK(BM_SequentValid)->Arg(0)->Arg(1);
BENCHMARK(BM_EnumerateFilters)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
