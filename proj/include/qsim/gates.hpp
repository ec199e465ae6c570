#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsim/matrix.hpp"
#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim {

inline constexpr double kUnitaryTolerance = 1e-10;

/// A one- or two-qubit unitary with its target qubits.
///
/// The matrix is 2^k x 2^k. For two targets (t0, t1) the local basis index is
/// bit(t0) + 2 * bit(t1), so the first listed target is the low local bit.
/// Unitarity is checked once, at construction; a Gate that exists is unitary.
class Gate {
 public:
  Gate(unsigned target, ComplexMatrix matrix);
  Gate(unsigned target0, unsigned target1, ComplexMatrix matrix);

  std::size_t arity() const noexcept { return targets_.size(); }
  std::span<const unsigned> targets() const noexcept { return targets_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::string& name() const noexcept { return name_; }

  Gate& named(std::string name) & {
    name_ = std::move(name);
    return *this;
  }
  Gate&& named(std::string name) && {
    name_ = std::move(name);
    return std::move(*this);
  }

 private:
  std::vector<unsigned> targets_;
  ComplexMatrix matrix_;
  std::string name_ = "U";
};

Gate not_gate(unsigned q);
// (1/sqrt 2) [[1, -1], [1, 1]]; squares to NOT up to the sign of one column.
Gate sqrt_not_gate(unsigned q);
Gate hadamard(unsigned q);
// diag(1, e^{i theta})
Gate phase(unsigned q, double theta);
// diag(1, 1, 1, e^{i theta}); symmetric in its two qubits.
Gate controlled_phase(unsigned control, unsigned target, double theta);
Gate controlled_not(unsigned control, unsigned target);

// Raw matrices of the two single-qubit gates the classical track compares to.
ComplexMatrix not_matrix();
ComplexMatrix sqrt_not_matrix();

/// Ordered gate list over a fixed register size.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {}

  // Throws DomainError when a target is outside [0, num_qubits).
  Circuit& add(Gate g);
  // SWAP realized as three CNOTs.
  Circuit& add_swap(unsigned a, unsigned b);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

 private:
  unsigned num_qubits_;
  std::vector<Gate> gates_;
};

// true iff max_ij |(U^dagger U - I)_ij| < tol. DomainError when not square.
bool validate_unitary(const ComplexMatrix& m, double tol = kUnitaryTolerance);

/// The 2^n x 2^n matrix of `g` acting on an n-qubit register: entry (i, j) is
/// the gate entry selected by the target bits of i and j when i and j agree on
/// every other bit, and zero otherwise. Test-oracle scale only (n <= 12).
ComplexMatrix embed_gate_dense(const Gate& g, unsigned num_qubits);

inline constexpr unsigned kMaxDenseQubits = 12;

// In place, O(2^n). DomainError when a target is outside the register.
void apply_gate(StateVector& s, const Gate& g);

// Single-threaded reference path for apply_gate.
void apply_gate_serial(StateVector& s, const Gate& g);

// DomainError on qubit-count mismatch.
void run_circuit(StateVector& s, const Circuit& c);

struct QubitMeasurement {
  unsigned bit;
  StateVector collapsed;
};

// Born-rule measurement of one qubit; the surviving branch is rescaled by
// 1/sqrt(p_bit). StateCorruptionError when both branches carry < 1e-12.
QubitMeasurement measure_qubit(const StateVector& s, unsigned q, RandomSource& rng);

}  // namespace qsim
