#include <benchmark/benchmark.h>

#include "e8kit/chevalley.hpp"
#include "e8kit/jinv.hpp"

namespace {

using namespace e8kit;

const LieAlgebra& algebra(SystemLabel label) {
  static const LieAlgebra d8(RootSystem(SystemLabel::D8));
  static const LieAlgebra e8(RootSystem(SystemLabel::E8));
  return label == SystemLabel::D8 ? d8 : e8;
}

void BM_KillingSerial(benchmark::State& state) {
  const auto& L = algebra(static_cast<SystemLabel>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(killing_integer_matrix_serial(L));
}

void BM_KillingParallel(benchmark::State& state) {
  const auto& L = algebra(static_cast<SystemLabel>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(killing_integer_matrix(L));
}

void BM_SearchSerial(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_equality_serial(s, r, 2 << s));
}

void BM_SearchParallel(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_equality(s, r, 2 << s));
}

const auto kD8 = static_cast<int64_t>(SystemLabel::D8);
const auto kE8 = static_cast<int64_t>(SystemLabel::E8);

}  // namespace

BENCHMARK(BM_KillingSerial)->Arg(kD8)->Arg(kE8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KillingParallel)->Arg(kD8)->Arg(kE8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Args({3, 4})->Args({4, 4})->Args({5, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchParallel)->Args({3, 4})->Args({4, 4})->Args({5, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
