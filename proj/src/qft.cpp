#include "qsim/qft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

// exp(2 pi i k / 2^n) with k reduced mod 2^n first so the argument stays small.
Complex root_of_unity(std::uint64_t k, unsigned num_qubits) {
  const std::uint64_t mask = num_qubits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_qubits) - 1;
  const double turns = std::ldexp(static_cast<double>(k & mask), -static_cast<int>(num_qubits));
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

}  // namespace

ComplexMatrix qft_matrix(unsigned num_qubits) {
  if (num_qubits < 1) throw DomainError("QFT needs at least one qubit");
  if (num_qubits > kMaxDenseQubits) throw ResourceError("dense QFT matrix limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix m(dim, dim);
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t z = 0; z < dim; ++z) m(y, z) = root_of_unity(y * z, num_qubits) * scale;
  return m;
}

Circuit qft_circuit(unsigned num_qubits) {
  if (num_qubits < 1) throw DomainError("QFT needs at least one qubit");
  Circuit c(num_qubits);
  for (unsigned j = num_qubits; j-- > 0;) {
    c.add(hadamard(j));
    for (unsigned k = j; k-- > 0;) c.add(controlled_phase(k, j, std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - k))));
  }
  for (unsigned i = 0; i < num_qubits / 2; ++i) c.add_swap(i, num_qubits - 1 - i);
  return c;
}

void apply_qft_circuit(StateVector& s) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<const Circuit>> cache;
  const unsigned n = s.num_qubits();
  const Circuit* circuit;
  {
    const std::lock_guard lock(mutex);
    if (cache.size() <= n) cache.resize(n + 1);
    if (!cache[n]) cache[n] = std::make_unique<const Circuit>(qft_circuit(n));
    circuit = cache[n].get();
  }
  run_circuit(s, *circuit);
}

std::uint64_t spike_count(unsigned num_qubits, std::uint64_t period, std::uint64_t offset) {
  if (num_qubits < 1 || num_qubits > 62) throw DomainError("register size out of range");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (period < 1 || period > dim) throw DomainError("period must satisfy 1 <= r <= 2^n");
  if (offset >= period) throw DomainError("offset must satisfy z < r");
  return (dim - offset + period - 1) / period;
}

Complex post_qft_amplitude_oracle(BasisIndex y, std::uint64_t period, std::uint64_t offset, unsigned num_qubits) {
  const std::uint64_t m = spike_count(num_qubits, period, offset);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (y >= dim) throw DomainError("y outside register");
  Complex sum{};
  for (std::uint64_t j = 0; j < m; ++j) {
    const std::uint64_t x = offset + j * period;
    const auto k = static_cast<std::uint64_t>((static_cast<unsigned __int128>(y) * x) % dim);
    sum += root_of_unity(k, num_qubits);
  }
  return sum / std::sqrt(static_cast<double>(m) * static_cast<double>(dim));
}

}  // namespace qsim
