#include <benchmark/benchmark.h>

#include <memory>

#include "weylhc/chartab.hpp"
#include "weylhc/cyclo.hpp"
#include "weylhc/hcseries.hpp"
#include "weylhc/hecke.hpp"

using namespace weylhc;

namespace {

std::shared_ptr<const CoxeterGroup> group(const char* t) {
  return std::make_shared<const CoxeterGroup>(CoxeterGroup::enumerate(RootDatum::from_type(CartanType::parse(t))));
}

const char* const kTypes[] = {"A4", "B4", "D5", "F4", "H3", "H4", "E6"};

void BM_Enumerate(benchmark::State& state) {
  const char* t = kTypes[state.range(0)];
  state.SetLabel(t);
  for (auto _ : state) benchmark::DoNotOptimize(group(t)->size());
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const char* t = kTypes[state.range(0)];
  state.SetLabel(t);
  const auto W = group(t);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(W).size());
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_GenericTable(benchmark::State& state) {
  const char* t = kTypes[state.range(0)];
  state.SetLabel(t);
  const auto W = group(t);
  for (auto _ : state) benchmark::DoNotOptimize(char_table_generic(W).size());
}
BENCHMARK(BM_GenericTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ParabolicPairs(benchmark::State& state) {
  const char* t = kTypes[state.range(0)];
  state.SetLabel(t);
  const auto table = character_table(group(t));
  for (auto _ : state) benchmark::DoNotOptimize(pairs_equal_on_proper_parabolics(table).size());
}
BENCHMARK(BM_ParabolicPairs)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_G2Schur(benchmark::State& state) {
  const auto table = character_table(group("G2"));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur_elements(table, HeckeParams::g2(k)).size());
}
BENCHMARK(BM_G2Schur)->Arg(1)->Arg(2)->Arg(5);

void BM_Cyclotomic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(n).degree());
}
BENCHMARK(BM_Cyclotomic)->Arg(30)->Arg(105)->Arg(210);

void BM_Zsigmondy(benchmark::State& state) {
  const long q = state.range(0);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(zsigmondy(q, n));
}
BENCHMARK(BM_Zsigmondy)->Args({2, 12})->Args({7, 23})->Args({19, 30})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
