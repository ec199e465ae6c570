#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsim/errors.hpp"
#include "qsim/qft.hpp"
#include "qsim/shor.hpp"
#include "test_util.hpp"

using namespace qsim;

TEST_CASE("qft_matrix small cases") {
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix one = qft_matrix(1);
  CHECK(std::abs(one(0, 0) - h) < 1e-15);
  CHECK(std::abs(one(0, 1) - h) < 1e-15);
  CHECK(std::abs(one(1, 0) - h) < 1e-15);
  CHECK(std::abs(one(1, 1) + h) < 1e-15);

  const ComplexMatrix two = qft_matrix(2);
  CHECK(std::abs(two(1, 1) - Complex(0.0, 0.5)) < 1e-15);
  CHECK(std::abs(two(3, 3) - Complex(0.0, 0.5)) < 1e-15);  // omega^9 = omega
  CHECK(std::abs(two(2, 1) - Complex(-0.5, 0.0)) < 1e-15);

  CHECK_THROWS_AS(qft_matrix(13), ResourceError);
}

TEST_CASE("qft_matrix maps the uniform state to |0>") {
  for (unsigned n = 1; n <= 8; ++n) {
    const StateVector u = uniform_superposition(n);
    const auto out = multiply(qft_matrix(n), u.amplitudes());
    CHECK(std::abs(out[0] - 1.0) < 1e-12);
    for (std::size_t i = 1; i < out.size(); ++i) CHECK(std::abs(out[i]) < 1e-12);
  }
}

TEST_CASE("qft_matrix is unitary") {
  for (unsigned n = 1; n <= 10; ++n) CHECK(unitarity_deviation(qft_matrix(n)) < 1e-10);
}

TEST_CASE("QFT circuit gate count is quadratic") {
  for (unsigned n = 1; n <= 10; ++n) {
    const std::size_t expected = n + n * (n - 1) / 2 + 3 * (n / 2);
    CHECK(qft_circuit(n).size() == expected);
  }
}

TEST_CASE("QFT circuit on |0> gives the uniform state") {
  for (unsigned n = 1; n <= 10; ++n) {
    StateVector s = new_basis_state(n, 0);
    apply_qft_circuit(s);
    const StateVector u = uniform_superposition(n);
    CHECK(test::max_abs_diff(s.amplitudes(), u.amplitudes()) < 1e-12);
  }
}

TEST_CASE("QFT circuit matches the dense matrix") {
  RandomSource rng(1729);
  for (unsigned n = 1; n <= 8; ++n) {
    const ComplexMatrix dense = qft_matrix(n);
    for (int k = 0; k < 20; ++k) {
      StateVector s = random_state(n, rng);
      const auto expected = multiply(dense, s.amplitudes());
      apply_qft_circuit(s);
      CHECK(test::max_abs_diff(s.amplitudes(), expected) < 1e-10);
    }
  }
}

TEST_CASE("four-spike comb transforms onto multiples of four") {
  StateVector s = prepare_periodic_superposition(4, 4, 0);
  const auto dense = multiply(qft_matrix(4), s.amplitudes());
  apply_qft_circuit(s);
  CHECK(test::max_abs_diff(s.amplitudes(), dense) < 1e-12);
  for (BasisIndex y = 0; y < 16; ++y) {
    const double expected = y % 4 == 0 ? 0.25 : 0.0;
    CHECK(std::abs(probability_of(s, y) - expected) < 1e-12);
  }
}

TEST_CASE("post_qft_amplitude_oracle examples") {
  CHECK(std::abs(std::norm(post_qft_amplitude_oracle(0, 4, 0, 4)) - 0.25) < 1e-12);
  CHECK(std::abs(post_qft_amplitude_oracle(1, 4, 0, 4)) < 1e-12);
  CHECK(std::abs(std::norm(post_qft_amplitude_oracle(4, 4, 1, 4)) - 0.25) < 1e-12);

  CHECK_THROWS_AS(post_qft_amplitude_oracle(0, 4, 4, 4), DomainError);
  CHECK_THROWS_AS(post_qft_amplitude_oracle(0, 17, 0, 4), DomainError);
  CHECK_THROWS_AS(post_qft_amplitude_oracle(16, 4, 0, 4), DomainError);
}

TEST_CASE("post_qft_amplitude_oracle matches full simulation") {
  RandomSource rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<unsigned>(rng.uniform_int(1, 8));
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t r = rng.uniform_int(1, dim);
    const std::uint64_t z = rng.uniform_int(0, r - 1);
    StateVector s = prepare_periodic_superposition(n, r, z);
    apply_qft_circuit(s);
    double worst = 0.0;
    for (BasisIndex y = 0; y < dim; ++y) {
      worst = std::max(worst, std::abs(post_qft_amplitude_oracle(y, r, z, n) - s[y]));
    }
    CHECK_MESSAGE(worst < 1e-10, "n=" << n << " r=" << r << " z=" << z);
  }
}

TEST_CASE("exact-divisor periods cancel off the comb") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned e = 0; e <= n; ++e) {
      const std::uint64_t r = std::uint64_t{1} << e;
      const std::uint64_t spacing = (std::uint64_t{1} << n) / r;
      for (std::uint64_t z : {std::uint64_t{0}, r - 1}) {
        StateVector s = prepare_periodic_superposition(n, r, z);
        apply_qft_circuit(s);
        double off = 0.0;
        for (BasisIndex y = 0; y < s.dimension(); ++y)
          if (y % spacing != 0) off += probability_of(s, y);
        CHECK(off < 1e-10);
      }
    }
  }
}
