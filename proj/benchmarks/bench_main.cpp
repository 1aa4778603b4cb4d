#include <benchmark/benchmark.h>

#include "trigva/fock/fock.hpp"
#include "trigva/fock/kernel.hpp"
#include "trigva/liealg/trig.hpp"
#include "trigva/vacuum/vacuum.hpp"

using namespace trigva;

static void BM_KernelApply(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const auto& k = fock::FockKernel::get(D);
  const auto& t = k.vertex(1, -2);
  fock::KVec v = fock::kvec_unit(k.size(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(k.apply(t, v));
}
BENCHMARK(BM_KernelApply)->Arg(6)->Arg(8)->Arg(10);

static void BM_RelationCheck(benchmark::State& state) {
  fock::Trunc t{6, 6, 4};
  for (auto _ : state) benchmark::DoNotOptimize(fock::relation_check(1, static_cast<int>(state.range(0)), t));
}
BENCHMARK(BM_RelationCheck)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_VacuumStraighten(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  std::vector<vacuum::Mode> word;
  for (int i = 0; i < len; ++i) word.push_back({-1 - (i * 2) % 3, {i % 4, (i + 2) % 4}});
  for (auto _ : state) {
    vacuum::VacuumModule mod({0, 3}, Scalar(2));
    benchmark::DoNotOptimize(mod.apply_word(word, vacuum::vacuum_vector()));
  }
}
BENCHMARK(BM_VacuumStraighten)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

static void BM_TrigBracket(benchmark::State& state) {
  auto kind = static_cast<liealg::Kind>(state.range(0));
  auto x = liealg::trig_gen(kind, 3, -2) + liealg::trig_gen(kind, -1, 1);
  auto y = liealg::trig_gen(kind, 2, 4) + liealg::trig_gen(kind, -3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(liealg::trig_bracket(x, y));
}
BENCHMARK(BM_TrigBracket)->DenseRange(0, 3);
BENCHMARK_MAIN();
