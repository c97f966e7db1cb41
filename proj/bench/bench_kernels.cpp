// Optimized (OpenMP) kernels against their serial references, plus a full
// network step. Thread count follows OMP_NUM_THREADS / DRIFTREC_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cstdlib>
#include <vector>

#include "driftrec/kernels.hpp"
#include "driftrec/kernels_reference.hpp"
#include "driftrec/optimizer.hpp"
#include "driftrec/rng.hpp"
#include "driftrec/score_net.hpp"

using namespace driftrec;

namespace {

Tensor4<float> random_tensor(std::size_t n, std::size_t c, std::size_t h, std::size_t w, std::uint64_t seed) {
  Rng rng(seed);
  Tensor4<float> t(n, c, h, w);
  for (auto& v : t.data) v = static_cast<float>(rng.normal());
  return t;
}

std::vector<float> random_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<float> v(n);
  for (auto& x : v) x = static_cast<float>(0.1 * rng.normal());
  return v;
}

// Args: batch, channels, size.
template <bool kReference>
void conv_forward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0)), c = static_cast<std::size_t>(state.range(1)),
             s = static_cast<std::size_t>(state.range(2));
  const auto in = random_tensor(n, c, s, s, 1);
  const auto w = random_vector(c * c * 9, 2), b = random_vector(c, 3);
  Tensor4<float> out;
  for (auto _ : state) {
    if constexpr (kReference)
      kernels::reference::conv2d_forward<float>(in, w, b, c, 3, out);
    else
      kernels::conv2d_forward<float>(in, w, b, c, 3, out);
    benchmark::DoNotOptimize(out.data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * c * c * 9 * s * s));
}

template <bool kReference>
void conv_backward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0)), c = static_cast<std::size_t>(state.range(1)),
             s = static_cast<std::size_t>(state.range(2));
  const auto in = random_tensor(n, c, s, s, 1), go = random_tensor(n, c, s, s, 4);
  const auto w = random_vector(c * c * 9, 2);
  std::vector<float> gw(w.size()), gb(c);
  Tensor4<float> gi(n, c, s, s);
  for (auto _ : state) {
    if constexpr (kReference)
      kernels::reference::conv2d_backward<float>(in, w, go, 3, &gi, gw, gb);
    else
      kernels::conv2d_backward<float>(in, w, go, 3, &gi, gw, gb);
    benchmark::DoNotOptimize(gi.data.data());
  }
}

template <bool kReference>
void group_norm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0)), c = static_cast<std::size_t>(state.range(1)),
             s = static_cast<std::size_t>(state.range(2));
  const auto in = random_tensor(n, c, s, s, 1);
  const std::vector<float> gamma(c, 1.0f), beta(c, 0.0f);
  Tensor4<float> out;
  std::vector<float> mean, rstd;
  for (auto _ : state) {
    if constexpr (kReference)
      kernels::reference::group_norm_forward<float>(in, gamma, beta, 4, 1e-5f, out, mean, rstd);
    else
      kernels::group_norm_forward<float>(in, gamma, beta, 4, 1e-5f, out, mean, rstd);
    benchmark::DoNotOptimize(out.data.data());
  }
}

// Args: batch, size. Default architecture, forward + backward.
void net_train_step(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0)), s = static_cast<std::size_t>(state.range(1));
  const ScoreNet<float> net(NetSpec{});
  Rng rng(7);
  const auto w = net.initialize(rng);
  const auto x = random_tensor(n, 3, s, s, 8), y = random_tensor(n, 3, s, s, 9), up = random_tensor(n, 3, s, s, 10);
  const std::vector<double> t(n, 0.5);
  for (auto _ : state) {
    NetTrace<float> trace;
    const auto out = net.forward(w, x, y, t, &trace);
    const auto g = net.backward(w, trace, up);
    benchmark::DoNotOptimize(g.values.data());
  }
}

void shapes(benchmark::internal::Benchmark* b) {
  b->Args({8, 16, 32})->Args({8, 32, 16})->Args({8, 64, 8})->Args({1, 16, 64});
}

}  // namespace

BENCHMARK(conv_forward<false>)->Name("conv_forward/openmp")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(conv_forward<true>)->Name("conv_forward/reference")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(conv_backward<false>)->Name("conv_backward/openmp")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(conv_backward<true>)->Name("conv_backward/reference")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(group_norm<false>)->Name("group_norm/openmp")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(group_norm<true>)->Name("group_norm/reference")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(net_train_step)->Args({8, 32})->Args({1, 64})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (const char* v = std::getenv("DRIFTREC_THREADS")) omp_set_num_threads(std::max(1, std::atoi(v)));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
