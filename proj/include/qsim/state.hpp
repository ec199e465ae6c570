#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsim/matrix.hpp"
#include "qsim/random.hpp"

namespace qsim {

// n-bit basis label. Bit q of the value is qubit q.
using BasisIndex = std::uint64_t;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kCorruptionThreshold = 1e-8;

/// Dense amplitude vector over n qubits, 2^n complex doubles.
///
/// Constructors that produce physical states (basis, uniform) are exactly
/// normalized. `from_amplitudes` accepts any vector of power-of-two length so
/// tests and oracles can build arbitrary inputs; operations that sample check
/// the norm before trusting it.
class StateVector {
 public:
  static StateVector basis(unsigned num_qubits, BasisIndex index);
  static StateVector uniform(unsigned num_qubits);
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  const Complex& operator[](BasisIndex i) const { return amplitudes_[i]; }
  Complex& operator[](BasisIndex i) { return amplitudes_[i]; }

 private:
  StateVector(unsigned n, std::vector<Complex> amps) : num_qubits_(n), amplitudes_(std::move(amps)) {}

  unsigned num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

StateVector new_basis_state(unsigned num_qubits, BasisIndex index);
StateVector uniform_superposition(unsigned num_qubits);

double l2_norm(const StateVector& s);

// |amplitude_i|^2
double probability_of(const StateVector& s, BasisIndex i);

// Throws StateCorruptionError when | ||s|| - 1 | > kCorruptionThreshold.
void require_normalized(const StateVector& s, const char* context);

struct Measurement {
  BasisIndex outcome;
  StateVector collapsed;
};

Measurement measure_all(const StateVector& s, RandomSource& rng);

/// Repeated full-register sampling from a fixed state. Builds the cumulative
/// distribution once; each draw is a binary search. Draw-for-draw identical to
/// calling measure_all with the same RandomSource.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(const StateVector& s);
  BasisIndex sample(RandomSource& rng) const;

 private:
  std::vector<double> cumulative_;
  BasisIndex last_supported_ = 0;
};

// Haar-like random state: independent standard normal real and imaginary
// parts, normalized. Deterministic given the RandomSource.
StateVector random_state(unsigned num_qubits, RandomSource& rng);

// One line per nonzero amplitude, "bits re im", ascending index, bits written
// most-significant qubit first, 17 significant digits.
std::string dump_state(const StateVector& s);

// n-character binary label of `index`, qubit n-1 first.
std::string to_bitstring(BasisIndex index, unsigned num_qubits);

}  // namespace qsim
