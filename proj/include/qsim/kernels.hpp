#pragma once

// Strided amplitude kernels.
//
// `kernels::` holds the production kernels, parallelized with OpenMP over
// independent index groups. `kernels::serial::` holds straightforward
// single-threaded reference versions written differently on purpose (scan all
// indices, skip the ones that are not group leaders); tests and the benchmark
// compare the two.
//
// Every kernel is generic over the scalar type so the same code drives complex
// amplitudes (quantum) and real probabilities (classical stochastic track).
//
// Index convention: qubit q is bit q of the basis index (qubit 0 = LSB). For a
// two-target operation with targets (t0, t1) the local row/column index is
// bit(t0) + 2 * bit(t1).

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace qsim::kernels {

// Below this many amplitudes the parallel region costs more than it saves.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 13;

// Reductions sum fixed-size chunks (possibly in parallel) and then add the chunk
// partials in ascending order. The result is independent of the thread count.
inline constexpr std::size_t kReductionChunk = 4096;

// Spread `i` by inserting a 0 bit at position `bit`.
constexpr std::size_t insert_zero_bit(std::size_t i, unsigned bit) {
  const std::size_t low = i & ((std::size_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

namespace detail {

// std::complex operator* carries an inf/NaN recovery branch that defeats GCC's
// vectorizer on the strided loops below (about 4x slower at -O3). Amplitudes
// are always finite, so the textbook product is exact enough.
inline std::complex<double> mul(std::complex<double> a, std::complex<double> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}
inline double mul(double a, double b) { return a * b; }

}  // namespace detail

template <typename T>
void apply_local_1(std::span<T> amps, unsigned q, std::span<const T, 4> m) {
  T* const data = amps.data();
  const std::size_t stride = std::size_t{1} << q;
  const T m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
  const auto count = static_cast<std::ptrdiff_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold) \
    firstprivate(data, stride, m00, m01, m10, m11, q)
  for (std::ptrdiff_t g = 0; g < count; ++g) {
    const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(g), q);
    const std::size_t i1 = i0 | stride;
    const T a0 = data[i0];
    const T a1 = data[i1];
    data[i0] = detail::mul(m00, a0) + detail::mul(m01, a1);
    data[i1] = detail::mul(m10, a0) + detail::mul(m11, a1);
  }
}

template <typename T>
void apply_local_2(std::span<T> amps, unsigned t0, unsigned t1, std::span<const T, 16> m) {
  const unsigned lo = t0 < t1 ? t0 : t1;
  const unsigned hi = t0 < t1 ? t1 : t0;
  const std::size_t b0 = std::size_t{1} << t0;
  const std::size_t b1 = std::size_t{1} << t1;
  T* const data = amps.data();
  std::array<T, 16> mat;
  for (std::size_t k = 0; k < 16; ++k) mat[k] = m[k];
  const auto count = static_cast<std::ptrdiff_t>(amps.size() / 4);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold) \
    firstprivate(data, mat, lo, hi, b0, b1)
  for (std::ptrdiff_t g = 0; g < count; ++g) {
    const std::size_t base = insert_zero_bit(insert_zero_bit(static_cast<std::size_t>(g), lo), hi);
    const std::array<std::size_t, 4> idx{base, base | b0, base | b1, base | b0 | b1};
    const std::array<T, 4> in{data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]};
    for (std::size_t r = 0; r < 4; ++r) {
      T acc = detail::mul(mat[r * 4], in[0]);
      acc += detail::mul(mat[r * 4 + 1], in[1]);
      acc += detail::mul(mat[r * 4 + 2], in[2]);
      acc += detail::mul(mat[r * 4 + 3], in[3]);
      data[idx[r]] = acc;
    }
  }
}

// Chunked deterministic reduction of `term(i)` over [0, size).
template <typename Term, typename Acc = std::invoke_result_t<Term, std::size_t>>
Acc chunked_sum(std::size_t size, Term term) {
  const std::size_t chunks = (size + kReductionChunk - 1) / kReductionChunk;
  std::vector<Acc> partial(chunks, Acc{});
  const auto count = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t end = begin + kReductionChunk < size ? begin + kReductionChunk : size;
    Acc acc{};
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  Acc total{};
  for (const Acc& p : partial) total += p;
  return total;
}

inline double sum_norm_sq(std::span<const std::complex<double>> amps) {
  return chunked_sum(amps.size(), [&](std::size_t i) { return std::norm(amps[i]); });
}

inline double sum_values(std::span<const double> v) {
  return chunked_sum(v.size(), [&](std::size_t i) { return v[i]; });
}

inline std::complex<double> mean(std::span<const std::complex<double>> amps) {
  return chunked_sum(amps.size(), [&](std::size_t i) { return amps[i]; }) / static_cast<double>(amps.size());
}

// a_i -> -a_i where marked(i). `marked` must be pure; it may run concurrently.
template <typename Pred>
void negate_marked(std::span<std::complex<double>> amps, Pred marked) {
  const auto count = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (marked(static_cast<std::uint64_t>(i))) amps[i] = -amps[i];
  }
}

// a_i -> 2 <a> - a_i
inline void reflect_about_mean(std::span<std::complex<double>> amps) {
  const std::complex<double> twice_mean = 2.0 * mean(amps);
  const auto count = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < count; ++i) amps[i] = twice_mean - amps[i];
}

namespace serial {

template <typename T>
void apply_local_1(std::span<T> amps, unsigned q, std::span<const T, 4> m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const T a0 = amps[i];
    const T a1 = amps[i | bit];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

template <typename T>
void apply_local_2(std::span<T> amps, unsigned t0, unsigned t1, std::span<const T, 16> m) {
  const std::size_t b0 = std::size_t{1} << t0;
  const std::size_t b1 = std::size_t{1} << t1;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & b0) || (i & b1)) continue;
    const std::size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    T in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps[idx[k]];
    for (int r = 0; r < 4; ++r) {
      T acc{};
      for (int c = 0; c < 4; ++c) acc += m[r * 4 + c] * in[c];
      amps[idx[r]] = acc;
    }
  }
}

inline double sum_norm_sq(std::span<const std::complex<double>> amps) {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return acc;
}

template <typename Pred>
void negate_marked(std::span<std::complex<double>> amps, Pred marked) {
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (marked(static_cast<std::uint64_t>(i))) amps[i] = -amps[i];
}

inline void reflect_about_mean(std::span<std::complex<double>> amps) {
  std::complex<double> sum{};
  for (const auto& a : amps) sum += a;
  const std::complex<double> twice_mean = 2.0 * sum / static_cast<double>(amps.size());
  for (auto& a : amps) a = twice_mean - a;
}

}  // namespace serial
}  // namespace qsim::kernels
