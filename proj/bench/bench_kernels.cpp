#include <benchmark/benchmark.h>

#include <array>
#include <complex>
#include <vector>

#include "qsim/kernels.hpp"
#include "qsim/random.hpp"

namespace {

using Complex = std::complex<double>;
namespace k = qsim::kernels;

std::vector<Complex> make_amps(unsigned n) {
  qsim::RandomSource rng(n);
  std::vector<Complex> v(std::size_t{1} << n);
  for (auto& a : v) a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  return v;
}

const std::array<Complex, 4> kHadamard{Complex(M_SQRT1_2), Complex(M_SQRT1_2), Complex(M_SQRT1_2),
                                       Complex(-M_SQRT1_2)};

std::array<Complex, 16> swap_like() {
  std::array<Complex, 16> m{};
  m[0] = m[6] = m[9] = m[15] = 1.0;
  return m;
}

template <bool Parallel>
void BM_ApplyLocal1(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto amps = make_amps(n);
  std::array<Complex, 4> m = kHadamard;
  benchmark::DoNotOptimize(m.data());
  unsigned q = 0;
  for (auto _ : state) {
    if constexpr (Parallel)
      k::apply_local_1<Complex>(amps, q, m);
    else
      k::serial::apply_local_1<Complex>(amps, q, m);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(amps.size()));
}

template <bool Parallel>
void BM_ApplyLocal2(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto amps = make_amps(n);
  auto m = swap_like();
  benchmark::DoNotOptimize(m.data());
  for (auto _ : state) {
    if constexpr (Parallel)
      k::apply_local_2<Complex>(amps, 1, n - 1, m);
    else
      k::serial::apply_local_2<Complex>(amps, 1, n - 1, m);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(amps.size()));
}

template <bool Parallel>
void BM_NormSq(benchmark::State& state) {
  const auto amps = make_amps(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    double v = Parallel ? k::sum_norm_sq(amps) : k::serial::sum_norm_sq(amps);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(amps.size()));
}

template <bool Parallel>
void BM_ReflectAboutMean(benchmark::State& state) {
  auto amps = make_amps(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      k::reflect_about_mean(amps);
    else
      k::serial::reflect_about_mean(amps);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(amps.size()));
}

}  // namespace

BENCHMARK(BM_ApplyLocal1<true>)->DenseRange(12, 22, 2)->Name("apply_local_1/omp");
BENCHMARK(BM_ApplyLocal1<false>)->DenseRange(12, 22, 2)->Name("apply_local_1/serial");
BENCHMARK(BM_ApplyLocal2<true>)->DenseRange(12, 22, 2)->Name("apply_local_2/omp");
BENCHMARK(BM_ApplyLocal2<false>)->DenseRange(12, 22, 2)->Name("apply_local_2/serial");
BENCHMARK(BM_NormSq<true>)->DenseRange(12, 22, 2)->Name("sum_norm_sq/omp");
BENCHMARK(BM_NormSq<false>)->DenseRange(12, 22, 2)->Name("sum_norm_sq/serial");
BENCHMARK(BM_ReflectAboutMean<true>)->DenseRange(12, 22, 2)->Name("reflect_about_mean/omp");
BENCHMARK(BM_ReflectAboutMean<false>)->DenseRange(12, 22, 2)->Name("reflect_about_mean/serial");

BENCHMARK_MAIN();
