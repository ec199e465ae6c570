#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Black-box predicate f : {0,1}^n -> {0,1} with an evaluation counter.
///
/// One counted call is either one classical evaluation or one superposed
/// phase-flip application. The predicate must be pure: the phase-flip kernel
/// may evaluate it from several threads.
class PredicateOracle {
 public:
  using Predicate = std::function<bool(BasisIndex)>;

  PredicateOracle(unsigned num_bits, Predicate f);
  // f(x) = 1 exactly on the listed indices.
  static PredicateOracle marking(unsigned num_bits, std::vector<BasisIndex> solutions);

  unsigned num_bits() const noexcept { return num_bits_; }
  std::uint64_t call_count() const noexcept { return calls_; }

  // Classical evaluation; counts one call.
  bool evaluate(BasisIndex x);
  // Uncounted access for the harness (exhaustive solution counting).
  bool peek(BasisIndex x) const { return f_(x); }

  void count_superposed_call() { ++calls_; }

 private:
  unsigned num_bits_;
  Predicate f_;
  std::uint64_t calls_ = 0;
};

struct GroverResult {
  BasisIndex found;
  std::uint64_t iterations;
  std::uint64_t oracle_calls;  // iterations + 1 classical verification
  bool success;
};

// Negate amplitudes where f = 1. Counts one oracle call.
void oracle_phase_flip(StateVector& s, PredicateOracle& oracle);

// Reflection about the uniform superposition: a_i -> 2 mean(a) - a_i.
void diffusion(StateVector& s);
void diffusion_serial(StateVector& s);

// floor((pi/4) sqrt(2^n / M)), at least 1. DomainError unless 1 <= M < 2^n.
std::uint64_t grover_iterations(unsigned num_qubits, std::uint64_t solutions);

// Expected uniform draws without replacement until a hit: (2^n + 1) / (M + 1).
double classical_expected_draws(unsigned num_qubits, std::uint64_t solutions);

// Harness-side exhaustive count of f = 1 (uncounted).
std::uint64_t count_solutions(const PredicateOracle& oracle);

/// Uniform start, grover_iterations(n, M) rounds of phase flip + diffusion,
/// full measurement, one classical check of the result. `solutions` must be the
/// true solution count.
GroverResult grover_search(PredicateOracle& oracle, std::uint64_t solutions, RandomSource& rng);

/// Entry k is the exact success probability (total weight on solutions) after
/// k rounds, k = 0..k_max. The (n, M) form marks indices 0..M-1; by symmetry
/// the curve depends only on M.
std::vector<double> grover_success_curve(unsigned num_qubits, std::uint64_t solutions, std::uint64_t k_max);
std::vector<double> grover_success_curve(PredicateOracle& oracle, std::uint64_t k_max);

inline constexpr unsigned kMaxCurveQubits = 16;

}  // namespace qsim
