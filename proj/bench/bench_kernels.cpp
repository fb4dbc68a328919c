// Serial reference kernels against their OpenMP versions.
#include "ultra/brute_force.hpp"
#include "ultra/generate.hpp"
#include "ultra/kernels.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace ultra;

SpectrumSet pool(int k) {
  SpectrumSet p;
  for (int i = 1; i <= k; ++i) p.emplace_back(i, k);
  return p;
}

std::vector<Level> levels_of(const Space& s) {
  std::vector<Level> out;
  for (PointIndex x = 0; x < s.size(); ++x) {
    auto row = s.row(x);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

template <auto Kernel>
void triangle(benchmark::State& state) {
  const Space s = gen_random(static_cast<std::size_t>(state.range(0)), 7, pool(6));
  const auto levels = levels_of(s);
  const kernels::LabelMatrix m{s.size(), levels};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
}

template <auto Kernel>
void minimax(benchmark::State& state) {
  const Space s = gen_random(static_cast<std::size_t>(state.range(0)), 7, pool(6));
  const auto levels = levels_of(s);
  const kernels::LabelMatrix m{s.size(), levels};
  const auto tree = kernels::minimum_spanning_tree(m);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, tree));
}

template <auto Kernel>
void modules(benchmark::State& state) {
  const Space s = gen_random(static_cast<std::size_t>(state.range(0)), 11, pool(4));
  const auto levels = levels_of(s);
  const kernels::LabelMatrix m{s.size(), levels};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
}

template <auto Kernel>
void extendable(benchmark::State& state) {
  const Analysis an(gen_cantor(static_cast<int>(state.range(0))));
  const auto group = enumerate_automorphisms(an.space());
  const auto maps = enumerate_partial_isometries(an, 6);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(group, maps));
}

}  // namespace

BENCHMARK(triangle<kernels::serial::first_triangle_violation>)->Name("triangle/serial")->Arg(128)->Arg(256);
BENCHMARK(triangle<kernels::parallel::first_triangle_violation>)->Name("triangle/parallel")->Arg(128)->Arg(256);
BENCHMARK(minimax<kernels::serial::first_minimax_violation>)->Name("minimax/serial")->Arg(512)->Arg(2048);
BENCHMARK(minimax<kernels::parallel::first_minimax_violation>)->Name("minimax/parallel")->Arg(512)->Arg(2048);
BENCHMARK(modules<kernels::serial::module_masks>)->Name("modules/serial")->Arg(10)->Arg(12);
BENCHMARK(modules<kernels::parallel::module_masks>)->Name("modules/parallel")->Arg(10)->Arg(12);
BENCHMARK(modules<kernels::serial::first_prime_subset>)->Name("prime/serial")->Arg(8);
BENCHMARK(modules<kernels::parallel::first_prime_subset>)->Name("prime/parallel")->Arg(8);
BENCHMARK(extendable<kernels::serial::extendable_flags>)->Name("extendable/serial")->Arg(2);
BENCHMARK(extendable<kernels::parallel::extendable_flags>)->Name("extendable/parallel")->Arg(2);

BENCHMARK_MAIN();
