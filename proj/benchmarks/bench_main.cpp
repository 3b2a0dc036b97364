#include <benchmark/benchmark.h>

#include <memory>

#include "twistlab/algebra.hpp"
#include "twistlab/cech.hpp"
#include "twistlab/dd.hpp"
#include "twistlab/sampling.hpp"
#include "twistlab/smith.hpp"

using namespace twistlab;

namespace {

std::shared_ptr<const Nerve> random_nerve(std::uint64_t seed, std::size_t points, std::size_t sets) {
  Rng rng(seed);
  auto cover = std::make_shared<const Cover>(random_cover(rng, points, sets, 0.5));
  return std::make_shared<const Nerve>(build_nerve(*cover));
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto nerve = random_nerve(7, 12, static_cast<std::size_t>(state.range(0)));
  const IntMatrix a = coboundary_matrix(*nerve, 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
  state.counters["rows"] = static_cast<double>(a.rows());
  state.counters["cols"] = static_cast<double>(a.cols());
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_Cohomology(benchmark::State& state) {
  const auto nerve = random_nerve(11, 10, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(nerve, FinAbGroup::cyclic(2), 2));
}
BENCHMARK(BM_Cohomology)->Arg(4)->Arg(6)->Arg(8);

void BM_Convolution(benchmark::State& state) {
  Rng rng(13);
  const auto nerve = random_nerve(13, static_cast<std::size_t>(state.range(0)), 4);
  const SigmaCAlgebra s(random_normalized_cocycle(rng, nerve, FinAbGroup::cyclic(4), CochainMode::pointwise));
  const AlgElem a = random_element(s.dimension(), rng), b = random_element(s.dimension(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(s.convolve(a, b));
  state.counters["dimension"] = static_cast<double>(s.dimension());
}
BENCHMARK(BM_Convolution)->Arg(4)->Arg(16)->Arg(64);

void BM_FourierForward(benchmark::State& state) {
  Rng rng(17);
  const auto nerve = random_nerve(17, static_cast<std::size_t>(state.range(0)), 4);
  const SigmaCAlgebra s(random_normalized_cocycle(rng, nerve, FinAbGroup({2, 2}), CochainMode::pointwise));
  const FourierTransform phi(s);
  const AlgElem a = random_element(s.dimension(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(phi.forward(a));
}
BENCHMARK(BM_FourierForward)->Arg(4)->Arg(16)->Arg(64);

void BM_DDClass(benchmark::State& state) {
  Rng rng(19);
  const auto nerve = random_nerve(19, 12, static_cast<std::size_t>(state.range(0)));
  const auto c = random_normalized_cocycle(rng, nerve, FinAbGroup::cyclic(2), CochainMode::nerve);
  for (auto _ : state) benchmark::DoNotOptimize(dd_class(c));
}
BENCHMARK(BM_DDClass)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
