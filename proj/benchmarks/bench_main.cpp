#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "permpoly/permpoly.hpp"

namespace {

using namespace permpoly;

void BM_FieldConstruction(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Field::of_order(q));
}
BENCHMARK(BM_FieldConstruction)->Arg(64)->Arg(729)->Arg(4096)->Arg(65536);

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  ElementIndex acc = 1;
  const ElementIndex g = f.primitive_element();
  for (auto _ : state) {
    acc = f.mul(acc, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(64)->Arg(729);

void BM_FieldAdd(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  ElementIndex acc = 1;
  for (auto _ : state) {
    acc = f.add(acc, 5);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldAdd)->Arg(64)->Arg(729);

void BM_CompileCarlitz(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  const auto w = word_transposition_carlitz(f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compile(w));
}
BENCHMARK(BM_CompileCarlitz)->Arg(16)->Arg(27)->Arg(64)->Arg(128);

void BM_Interpolate(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  const auto perm = word_to_permutation(word_transposition_zieve(f, 2));
  std::vector<std::pair<ElementIndex, ElementIndex>> pts;
  for (std::uint32_t i = 0; i < perm.size(); ++i) pts.emplace_back(i, perm(i));
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(f, pts));
}
BENCHMARK(BM_Interpolate)->Arg(27)->Arg(64)->Arg(128);

void BM_DecomposeRandom(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const Field f = Field::of_order(q);
  std::vector<std::uint32_t> images(q);
  std::iota(images.begin(), images.end(), 0u);
  std::mt19937_64 rng(1);
  std::shuffle(images.begin(), images.end(), rng);
  const Permutation perm(images);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f, perm, Gadget::kZieve));
}
BENCHMARK(BM_DecomposeRandom)->Arg(16)->Arg(64)->Arg(256);

void BM_BruteCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_check(16, 4));
}
BENCHMARK(BM_BruteCheck);

}  // namespace

BENCHMARK_MAIN();
