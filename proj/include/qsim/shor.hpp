#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsim/number_theory.hpp"
#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Registers up to this size are simulated as state vectors; above it the
// exact analytic sampler takes over.
inline constexpr unsigned kMaxSimulatedQubits = 22;

struct Fraction {
  u64 num;
  u64 den;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Continued-fraction expansion of num/den: partial quotients and the
/// convergents they generate, each convergent in lowest terms, the last one
/// equal to num/den. When the second quotient is 1 the opening 0/1 shares its
/// denominator with 1/1 and is dropped, so denominators strictly increase.
struct ContinuedFraction {
  std::vector<u64> terms;
  std::vector<Fraction> convergents;
};

// DomainError when den = 0 or num >= den.
ContinuedFraction continued_fraction_expansion(u64 num, u64 den);

// Denominator of the last convergent of y / 2^n with denominator <= q_bound;
// nullopt for y = 0.
std::optional<u64> recover_period_candidate(BasisIndex y, unsigned num_qubits, u64 q_bound);

// floor(2^(n/2))
u64 default_q_bound(unsigned num_qubits);

/// Amplitude 1/sqrt(m) at z, z + r, ... (m = spike_count(n, r, z)), zero
/// elsewhere. DomainError unless 1 <= r <= 2^n and z < r.
StateVector prepare_periodic_superposition(unsigned num_qubits, u64 period, u64 offset);
// Offset drawn uniformly from [0, r).
StateVector prepare_periodic_superposition(unsigned num_qubits, u64 period, RandomSource& rng);

/// One period-finding measurement: random offset, spike comb, Fourier
/// transform, full measurement. State-vector simulation up to
/// kMaxSimulatedQubits, analytic sampling above.
BasisIndex sample_period_measurement(unsigned num_qubits, u64 period, RandomSource& rng);
// `shots` independent measurements. Below the simulation limit each distinct
// offset is simulated once and all shots that drew it sample the same state.
std::vector<BasisIndex> sample_period_measurements(unsigned num_qubits, u64 period, std::size_t shots,
                                                   RandomSource& rng);
BasisIndex sample_period_measurement_statevector(unsigned num_qubits, u64 period, RandomSource& rng);

/// Exact sampler for the same distribution without a state vector. Draws the
/// offset, then samples the Fejer kernel |sum_j w^{j t}|^2 over the reduced
/// phase t = y r mod 2^n and maps t back to y. Kernels with at most
/// `enumeration_limit` points are sampled by enumeration, larger ones by
/// rejection from a flat-top / inverse-square envelope.
BasisIndex sample_period_measurement_analytic(unsigned num_qubits, u64 period, RandomSource& rng,
                                              u64 enumeration_limit = u64{1} << 16);

/// Exact outcome distribution of sample_period_measurement (offset averaged
/// out), closed form. n <= 20.
std::vector<double> period_measurement_probabilities(unsigned num_qubits, u64 period);

/// f on {0, ..., 2^n - 1} with f(x) = f(y) iff r | x - y.
///
/// The hidden period is visible only to SimulatedPeriodSampler (the stand-in
/// for the quantum device) and to the exhaustive validity check; recovery code
/// receives a BlackBoxFunction, which carries no period.
class PeriodicOracle {
 public:
  using Function = std::function<u64(u64)>;

  PeriodicOracle(unsigned num_bits, u64 hidden_period, Function f);
  // f(x) = x mod r
  static PeriodicOracle residue(unsigned num_bits, u64 period);
  // f(x) = a^x mod N; the period is the multiplicative order of a.
  static PeriodicOracle modular_exponentiation(unsigned num_bits, u64 base, u64 modulus);

  unsigned num_bits() const noexcept { return num_bits_; }
  u64 evaluate(u64 x) const { return f_(x); }

  // Exhaustive check of f(x) = f(y) <=> r | x - y. ResourceError for n > 16.
  bool is_valid() const;

 private:
  friend class SimulatedPeriodSampler;

  unsigned num_bits_;
  u64 period_;
  Function f_;
};

// What period recovery may see of the oracle.
struct BlackBoxFunction {
  unsigned num_bits;
  PeriodicOracle::Function evaluate;
};

BlackBoxFunction black_box(const PeriodicOracle& oracle);

// Source of Fourier-basis measurement outcomes y in [0, 2^n).
class MeasurementSource {
 public:
  virtual ~MeasurementSource() = default;
  virtual unsigned num_bits() const = 0;
  virtual BasisIndex measure(RandomSource& rng) = 0;
};

class SimulatedPeriodSampler final : public MeasurementSource {
 public:
  explicit SimulatedPeriodSampler(const PeriodicOracle& oracle)
      : num_bits_(oracle.num_bits()), period_(oracle.period_) {}
  unsigned num_bits() const override { return num_bits_; }
  BasisIndex measure(RandomSource& rng) override { return sample_period_measurement(num_bits_, period_, rng); }

 private:
  unsigned num_bits_;
  u64 period_;
};

struct PeriodAttempt {
  BasisIndex y;
  std::vector<Fraction> convergents;
  std::optional<u64> candidate;
  // Values tested against f(0) this attempt (the candidate and its LCMs).
  std::vector<u64> tested;
  bool verified;
};

struct PeriodSearch {
  std::optional<u64> period;
  std::vector<PeriodAttempt> attempts;
};

/// Up to `max_attempts` measurements. Each candidate denominator q, and the
/// LCM of q with every earlier candidate, is tested: a value v with
/// f(v) = f(0) is a multiple of the period and is reduced to its smallest
/// divisor d with f(d) = f(0), which is the period. The accumulated candidate
/// 1 is tested on the first attempt so a constant f needs no informative y.
PeriodSearch recover_period(const BlackBoxFunction& f, MeasurementSource& source, u64 max_attempts,
                            RandomSource& rng);

// recover_period driven by the simulated device; RecoveryFailure when the
// attempts run out.
u64 find_period(const PeriodicOracle& oracle, u64 max_attempts, RandomSource& rng);
PeriodSearch find_period_traced(const PeriodicOracle& oracle, u64 max_attempts, RandomSource& rng);

enum class ClassicalRoute { kNone, kEven, kPrimePower, kPrime };

struct ClassicalCheck {
  ClassicalRoute route;
  // Set for kEven (2) and kPrimePower (p).
  std::optional<u64> factor;
};

// Parity, primality and prime-power probing. DomainError for N < 4.
ClassicalCheck classical_precheck(u64 n);

struct FactorRound {
  u64 base;
  u64 gcd_with_n;
  unsigned register_qubits = 0;
  std::optional<u64> period;
  std::vector<PeriodAttempt> attempts;
  std::optional<u64> factor;
  const char* outcome = "";
};

struct FactorResult {
  u64 n_input;
  u64 factor;
  u64 attempts;  // rounds used
  std::vector<FactorRound> rounds;
};

/// One round of the reduction with a fixed base a (2 <= a <= N - 2).
FactorRound factor_round(u64 n, u64 base, RandomSource& rng, u64 max_period_attempts = 32);

/// Randomized reduction of factoring to order finding. Requires N odd,
/// composite and not a prime power (DomainError naming the classical answer
/// otherwise). RecoveryFailure after max_rounds.
FactorResult factor(u64 n, u64 max_rounds, RandomSource& rng, u64 max_period_attempts = 32);

// Trace-returning form; factor is nullopt when the rounds ran out.
struct FactorSearch {
  std::optional<u64> factor;
  std::vector<FactorRound> rounds;
};
FactorSearch factor_traced(u64 n, u64 max_rounds, RandomSource& rng, u64 max_period_attempts = 32);

}  // namespace qsim
