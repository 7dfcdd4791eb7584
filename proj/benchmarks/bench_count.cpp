#include <benchmark/benchmark.h>

#include "domset/ds_count.hpp"
#include "domset/instance_gen.hpp"

namespace {

domset::Instance connected_instance(std::size_t n) {
  for (std::uint64_t seed = 0;; ++seed) {
    domset::Instance inst = domset::gen_instance({seed, std::max<std::size_t>(1, n / 10), n, 12, 3});
    if (domset::is_connected(inst.graph)) return inst;
  }
}

void BM_CountDs(benchmark::State& state, domset::SumMethod method) {
  const auto inst = connected_instance(static_cast<std::size_t>(state.range(0)));
  const auto tree = domset::build_tree(inst.tree);
  for (auto _ : state) benchmark::DoNotOptimize(domset::count_ds(inst.graph, tree, method));
  state.SetComplexityN(state.range(0));
}

void BM_CountBinaryOnly(benchmark::State& state) {
  const auto inst = connected_instance(static_cast<std::size_t>(state.range(0)));
  const auto bt = domset::to_binary(domset::build_tree(inst.tree), inst.graph.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(domset::count_binary(bt));
}

}  // namespace

BENCHMARK_CAPTURE(BM_CountDs, prefix, domset::SumMethod::kPrefixSums)
    ->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CountDs, direct, domset::SumMethod::kDirect)
    ->Arg(250)->Arg(500)->Arg(1000)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountBinaryOnly)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
