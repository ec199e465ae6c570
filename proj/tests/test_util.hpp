#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "qsim/classical.hpp"
#include "qsim/gates.hpp"
#include "qsim/matrix.hpp"
#include "qsim/random.hpp"

namespace qsim::test {

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double gaussian(RandomSource& rng) {
  return std::sqrt(-2.0 * std::log(rng.uniform_open_closed())) * std::cos(6.283185307179586 * rng.uniform());
}

// Gram-Schmidt on the columns of a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, RandomSource& rng) {
  ComplexMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = Complex(gaussian(rng), gaussian(rng));
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot{};
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(m(r, p)) * m(r, c);
      for (std::size_t r = 0; r < dim; ++r) m(r, c) -= dot * m(r, p);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(m(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) m(r, c) /= norm;
  }
  return m;
}

// Random 1- or 2-qubit gate on random distinct targets below n.
inline Gate random_gate(unsigned n, RandomSource& rng) {
  const bool two = n >= 2 && rng.uniform() < 0.5;
  const auto t0 = static_cast<unsigned>(rng.uniform_int(0, n - 1));
  if (!two) return Gate(t0, random_unitary(2, rng));
  unsigned t1;
  do {
    t1 = static_cast<unsigned>(rng.uniform_int(0, n - 1));
  } while (t1 == t0);
  return Gate(t0, t1, random_unitary(4, rng));
}

inline RealMatrix random_stochastic(std::size_t dim, RandomSource& rng) {
  RealMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < dim; ++r) sum += (m(r, c) = rng.uniform());
    for (std::size_t r = 0; r < dim; ++r) m(r, c) /= sum;
  }
  return m;
}

inline ProbVector random_distribution(unsigned n, RandomSource& rng) {
  std::vector<double> p(std::size_t{1} << n);
  double sum = 0.0;
  for (auto& x : p) sum += (x = rng.uniform());
  for (auto& x : p) x /= sum;
  return ProbVector::from_probs(std::move(p));
}

inline LocalStochasticOp random_op(unsigned n, RandomSource& rng) {
  const auto t0 = static_cast<unsigned>(rng.uniform_int(0, n - 1));
  if (n < 2 || rng.uniform() < 0.5) return LocalStochasticOp(t0, random_stochastic(2, rng));
  unsigned t1;
  do {
    t1 = static_cast<unsigned>(rng.uniform_int(0, n - 1));
  } while (t1 == t0);
  return LocalStochasticOp(t0, t1, random_stochastic(4, rng));
}

struct ChiSquare {
  double statistic;
  double critical;
  std::size_t dof;
  bool pass;
};

// Pearson goodness of fit. Bins with zero expected mass must be empty (checked
// by the caller); bins with expected count < 5 are pooled.
inline ChiSquare chi_square(std::span<const std::uint64_t> counts, std::span<const double> probs,
                            double significance) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  double stat = 0.0;
  std::size_t bins = 0;
  double pooled_expected = 0.0, pooled_observed = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probs[i] * static_cast<double>(total);
    if (expected <= 0.0) continue;
    if (expected < 5.0) {
      pooled_expected += expected;
      pooled_observed += static_cast<double>(counts[i]);
      continue;
    }
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
    ++bins;
  }
  if (pooled_expected > 0.0) {
    const double diff = pooled_observed - pooled_expected;
    stat += diff * diff / pooled_expected;
    ++bins;
  }
  const std::size_t dof = bins > 1 ? bins - 1 : 1;
  const double critical =
      boost::math::quantile(boost::math::complement(boost::math::chi_squared(static_cast<double>(dof)), significance));
  return {stat, critical, dof, stat <= critical};
}

}  // namespace qsim::test
