#include <benchmark/benchmark.h>

#include "ferrers/board.hpp"
#include "ferrers/bruhat.hpp"
#include "ferrers/poset.hpp"
#include "ferrers/reconstruct.hpp"

using namespace ferrers;

namespace {

const Partition kMedium(std::vector<int>{3, 3, 5, 6, 6});        // 108 elements
const Partition kLarge = Partition::from_gjw(GjwSequence(
    std::vector<int>{2, 2, 2, 2, 2, 2}));                        // 729 elements

void BM_NormalForm(benchmark::State& state) {
  const Partition p = parse_board("g:2,2,3,2,1,0,1,0,0,3,2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(p.gjw()));
  }
}
BENCHMARK(BM_NormalForm);

void BM_BuildPoset(benchmark::State& state) {
  const Partition& p = state.range(0) == 0 ? kMedium : kLarge;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_poset(p));
  }
}
BENCHMARK(BM_BuildPoset)->Arg(0)->Arg(1);

void BM_AreIsomorphic(benchmark::State& state) {
  const Poset a = build_poset(Partition(std::vector<int>{2, 3, 5, 6, 6}));
  const Poset b = build_poset(Partition(std::vector<int>{3, 4, 4, 5, 6}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(a, b));
  }
}
BENCHMARK(BM_AreIsomorphic);

void BM_Reconstruct(benchmark::State& state) {
  const Poset p =
      with_anonymous_labels(build_poset(state.range(0) == 0 ? kMedium : kLarge));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(p));
  }
}
BENCHMARK(BM_Reconstruct)->Arg(0)->Arg(1);

void BM_LowerInterval(benchmark::State& state) {
  const Permutation top = top_permutation(kMedium);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_bruhat_interval(top));
  }
}
BENCHMARK(BM_LowerInterval);

}  // namespace

BENCHMARK_MAIN();
