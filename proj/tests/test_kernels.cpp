#include <doctest.h>

#include <array>
#include <complex>
#include <vector>

#include "qsim/kernels.hpp"
#include "test_util.hpp"

using namespace qsim;

namespace {

std::vector<Complex> random_amps(std::size_t dim, RandomSource& rng) {
  std::vector<Complex> v(dim);
  for (auto& a : v) a = Complex(test::gaussian(rng), test::gaussian(rng));
  return v;
}

template <std::size_t N>
std::array<Complex, N> flatten(const ComplexMatrix& m) {
  std::array<Complex, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = m.data()[i];
  return out;
}

}  // namespace

// Sizes straddle kParallelThreshold so both the serial-if and threaded branches run.
TEST_CASE("parallel and reference kernels agree on complex amplitudes") {
  RandomSource rng(77);
  for (unsigned n : {1u, 3u, 7u, 12u, 14u, 15u}) {
    const std::size_t dim = std::size_t{1} << n;
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_amps(dim, rng);
      auto b = a;
      const auto q = static_cast<unsigned>(rng.uniform_int(0, n - 1));
      const auto m1 = flatten<4>(test::random_unitary(2, rng));
      kernels::apply_local_1<Complex>(a, q, m1);
      kernels::serial::apply_local_1<Complex>(b, q, m1);
      CHECK(test::max_abs_diff(a, b) == 0.0);

      if (n < 2) continue;
      unsigned t1;
      do {
        t1 = static_cast<unsigned>(rng.uniform_int(0, n - 1));
      } while (t1 == q);
      const auto m2 = flatten<16>(test::random_unitary(4, rng));
      kernels::apply_local_2<Complex>(a, q, t1, m2);
      kernels::serial::apply_local_2<Complex>(b, q, t1, m2);
      CHECK(test::max_abs_diff(a, b) < 1e-14);
    }
  }
}

TEST_CASE("parallel and reference kernels agree on real probabilities") {
  RandomSource rng(78);
  for (unsigned n : {2u, 9u, 14u}) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> a(dim);
    for (auto& x : a) x = rng.uniform();
    auto b = a;
    const RealMatrix s2 = test::random_stochastic(2, rng);
    const RealMatrix s4 = test::random_stochastic(4, rng);
    std::array<double, 4> m1{};
    std::array<double, 16> m2{};
    std::copy_n(s2.data().begin(), 4, m1.begin());
    std::copy_n(s4.data().begin(), 16, m2.begin());
    kernels::apply_local_1<double>(a, n - 1, m1);
    kernels::serial::apply_local_1<double>(b, n - 1, m1);
    kernels::apply_local_2<double>(a, 1, 0, m2);
    kernels::serial::apply_local_2<double>(b, 1, 0, m2);
    CHECK(test::max_abs_diff(a, b) < 1e-15);
  }
}

TEST_CASE("reductions, marking and reflection") {
  RandomSource rng(79);
  for (unsigned n : {0u, 5u, 13u, 16u}) {
    const std::size_t dim = std::size_t{1} << n;
    auto a = random_amps(dim, rng);
    auto b = a;
    const double fast = kernels::sum_norm_sq(a);
    const double ref = kernels::serial::sum_norm_sq(a);
    CHECK(std::abs(fast - ref) <= 1e-12 * ref);

    const auto marked = [](std::uint64_t i) { return i % 3 == 1; };
    kernels::negate_marked(std::span<Complex>(a), marked);
    kernels::serial::negate_marked(std::span<Complex>(b), marked);
    CHECK(test::max_abs_diff(a, b) == 0.0);

    kernels::reflect_about_mean(a);
    kernels::serial::reflect_about_mean(b);
    CHECK(test::max_abs_diff(a, b) < 1e-12);
  }
}

TEST_CASE("chunked reduction is independent of chunk boundaries") {
  std::vector<double> v(3 * kernels::kReductionChunk + 17, 0.25);
  CHECK(kernels::sum_values(v) == 0.25 * static_cast<double>(v.size()));
  CHECK(kernels::chunked_sum(0, [](std::size_t) { return 1.0; }) == 0.0);
}

TEST_CASE("insert_zero_bit") {
  CHECK(kernels::insert_zero_bit(0b111, 0) == 0b1110);
  CHECK(kernels::insert_zero_bit(0b111, 1) == 0b1101);
  CHECK(kernels::insert_zero_bit(0b111, 3) == 0b0111);
}
