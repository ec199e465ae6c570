#pragma once

#include "qsim/gates.hpp"
#include "qsim/matrix.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Dense Fourier matrix, entry (y, z) = exp(2 pi i y z / 2^n) / sqrt(2^n).
/// Test oracle only; ResourceError above kMaxDenseQubits.
ComplexMatrix qft_matrix(unsigned num_qubits);

/// Hadamard + controlled-phase ladder followed by a qubit-order reversal
/// (each swap as three CNOTs). n(n-1)/2 controlled phases, n Hadamards.
Circuit qft_circuit(unsigned num_qubits);

void apply_qft_circuit(StateVector& s);

// Spikes at z, z + r, z + 2r, ... below 2^n: ceil((2^n - z) / r).
std::uint64_t spike_count(unsigned num_qubits, std::uint64_t period, std::uint64_t offset);

/// Amplitude at y after the Fourier transform of the normalized spike comb
/// {z, z + r, ...}, evaluated as the explicit finite sum
///   sum_j exp(2 pi i y (z + j r) / 2^n) / sqrt(m 2^n).
/// DomainError unless 1 <= r <= 2^n, z < r, y < 2^n.
Complex post_qft_amplitude_oracle(BasisIndex y, std::uint64_t period, std::uint64_t offset, unsigned num_qubits);

}  // namespace qsim
