#include "qsim/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

#include "qsim/errors.hpp"
#include "qsim/kernels.hpp"

namespace qsim {

namespace {

constexpr unsigned kMaxAddressableQubits = 40;

void check_qubit_count(unsigned n) {
  if (n < 1) throw DomainError("state needs at least one qubit");
  if (n > kMaxAddressableQubits)
    throw ResourceError("state of " + std::to_string(n) + " qubits does not fit in memory");
}

}  // namespace

StateVector StateVector::basis(unsigned num_qubits, BasisIndex index) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim)
    throw DomainError("basis index " + std::to_string(index) + " out of range for " +
                      std::to_string(num_qubits) + " qubits");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::uniform(unsigned num_qubits) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  return StateVector(num_qubits, std::vector<Complex>(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim))
    throw DomainError("amplitude count must be a power of two >= 2");
  const auto n = static_cast<unsigned>(std::countr_zero(dim));
  return StateVector(n, std::move(amplitudes));
}

StateVector new_basis_state(unsigned num_qubits, BasisIndex index) {
  return StateVector::basis(num_qubits, index);
}

StateVector uniform_superposition(unsigned num_qubits) { return StateVector::uniform(num_qubits); }

double l2_norm(const StateVector& s) { return std::sqrt(kernels::sum_norm_sq(s.amplitudes())); }

double probability_of(const StateVector& s, BasisIndex i) {
  if (i >= s.dimension()) throw DomainError("basis index out of range");
  return std::norm(s[i]);
}

void require_normalized(const StateVector& s, const char* context) {
  const double norm = l2_norm(s);
  if (!(std::abs(norm - 1.0) <= kCorruptionThreshold)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: state norm %.17g deviates from 1", context, norm);
    throw StateCorruptionError(buf);
  }
}

OutcomeSampler::OutcomeSampler(const StateVector& s) {
  require_normalized(s, "measure");
  cumulative_.resize(s.dimension());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const double p = std::norm(s[i]);
    acc += p;
    cumulative_[i] = acc;
    if (p > 0.0) last_supported_ = i;
  }
}

BasisIndex OutcomeSampler::sample(RandomSource& rng) const {
  const double u = rng.uniform();
  // First index whose cumulative mass exceeds u. Rounding can leave the total a
  // hair under u; that draw belongs to the last index with nonzero mass.
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return last_supported_;
  return static_cast<BasisIndex>(it - cumulative_.begin());
}

Measurement measure_all(const StateVector& s, RandomSource& rng) {
  const BasisIndex outcome = OutcomeSampler(s).sample(rng);
  return {outcome, StateVector::basis(s.num_qubits(), outcome)};
}

StateVector random_state(unsigned num_qubits, RandomSource& rng) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<Complex> amps(dim);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    // Box-Muller; both outputs used, one per component.
    const double radius = std::sqrt(-2.0 * std::log(rng.uniform_open_closed()));
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * rng.uniform();
    a = std::polar(radius, angle);
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= scale;
  return StateVector::from_amplitudes(std::move(amps));
}

std::string to_bitstring(BasisIndex index, unsigned num_qubits) {
  std::string bits(num_qubits, '0');
  for (unsigned q = 0; q < num_qubits; ++q)
    if ((index >> q) & 1U) bits[num_qubits - 1 - q] = '1';
  return bits;
}

std::string dump_state(const StateVector& s) {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const Complex a = s[i];
    if (a == Complex{}) continue;
    std::snprintf(buf, sizeof buf, " %.17g %.17g\n", a.real(), a.imag());
    out += to_bitstring(i, s.num_qubits());
    out += buf;
  }
  return out;
}

}  // namespace qsim
