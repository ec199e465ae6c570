#pragma once

#include <span>
#include <vector>

#include "qsim/matrix.hpp"
#include "qsim/state.hpp"

namespace qsim {

inline constexpr double kStochasticTolerance = 1e-10;
// Negative probabilities down to this are rounding noise and clamp to zero.
inline constexpr double kNegativeClamp = -1e-15;

/// Probability vector over n classical bits: 2^n nonnegative reals summing to one.
class ProbVector {
 public:
  static ProbVector point_mass(unsigned num_bits, BasisIndex index);
  static ProbVector uniform(unsigned num_bits);
  // DomainError when the length is not a power of two, an entry is below the
  // clamp floor, or the sum is off by more than kStochasticTolerance.
  static ProbVector from_probs(std::vector<double> probs);

  unsigned num_bits() const noexcept { return num_bits_; }
  std::size_t dimension() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  std::span<double> probs() noexcept { return probs_; }
  double operator[](BasisIndex i) const { return probs_[i]; }

 private:
  ProbVector(unsigned n, std::vector<double> p) : num_bits_(n), probs_(std::move(p)) {}

  unsigned num_bits_ = 0;
  std::vector<double> probs_;
};

double l1_norm(const ProbVector& p);

/// Column-stochastic map on one or two bits. Target ordering and local index
/// layout match Gate. Validated at construction.
class LocalStochasticOp {
 public:
  LocalStochasticOp(unsigned target, RealMatrix matrix);
  LocalStochasticOp(unsigned target0, unsigned target1, RealMatrix matrix);

  // Deterministic maps are the 0/1 special case; ValidationError otherwise.
  static LocalStochasticOp deterministic(unsigned target, RealMatrix matrix);
  static LocalStochasticOp deterministic(unsigned target0, unsigned target1, RealMatrix matrix);

  std::size_t arity() const noexcept { return targets_.size(); }
  std::span<const unsigned> targets() const noexcept { return targets_; }
  const RealMatrix& matrix() const noexcept { return matrix_; }

 private:
  std::vector<unsigned> targets_;
  RealMatrix matrix_;
};

// Every column holds exactly one 1. DomainError for non-square input or an
// entry other than 0 or 1.
bool validate_deterministic(const RealMatrix& m);

// Square, all entries >= 0, every column sums to 1 within tol.
bool validate_stochastic(const RealMatrix& m, double tol = kStochasticTolerance);

// In place. DomainError for targets outside the register; StateCorruptionError
// if an entry comes out below the clamp floor.
void apply_local_stochastic(ProbVector& p, const LocalStochasticOp& op);
void apply_local_stochastic_serial(ProbVector& p, const LocalStochasticOp& op);

// Dense 2^n x 2^n embedding, same locality rule as embed_gate_dense.
RealMatrix embed_stochastic_dense(const LocalStochasticOp& op, unsigned num_bits);

// probs_i = |amplitude_i|^2
ProbVector quantum_to_distribution(const StateVector& s);

// The uniformizing coin flip ((1/2, 1/2), (1/2, 1/2)).
RealMatrix fair_coin_matrix();

}  // namespace qsim
