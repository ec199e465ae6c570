#include "qsim/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsim/errors.hpp"
#include "qsim/kernels.hpp"

namespace qsim {

PredicateOracle::PredicateOracle(unsigned num_bits, Predicate f) : num_bits_(num_bits), f_(std::move(f)) {
  if (num_bits < 1 || num_bits > 40) throw DomainError("predicate width out of range");
  if (!f_) throw DomainError("predicate is empty");
}

PredicateOracle PredicateOracle::marking(unsigned num_bits, std::vector<BasisIndex> solutions) {
  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  for (BasisIndex s : solutions)
    if (num_bits < 64 && s >= (BasisIndex{1} << num_bits)) throw DomainError("solution index outside domain");
  return PredicateOracle(num_bits, [marked = std::move(solutions)](BasisIndex x) {
    return std::binary_search(marked.begin(), marked.end(), x);
  });
}

bool PredicateOracle::evaluate(BasisIndex x) {
  ++calls_;
  return f_(x);
}

void oracle_phase_flip(StateVector& s, PredicateOracle& oracle) {
  if (oracle.num_bits() != s.num_qubits()) throw DomainError("oracle width differs from register size");
  oracle.count_superposed_call();
  kernels::negate_marked(s.amplitudes(), [&oracle](BasisIndex x) { return oracle.peek(x); });
}

void diffusion(StateVector& s) { kernels::reflect_about_mean(s.amplitudes()); }

void diffusion_serial(StateVector& s) { kernels::serial::reflect_about_mean(s.amplitudes()); }

std::uint64_t grover_iterations(unsigned num_qubits, std::uint64_t solutions) {
  if (num_qubits < 1 || num_qubits > 62) throw DomainError("register size out of range");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (solutions < 1 || solutions >= dim) throw DomainError("solution count must satisfy 1 <= M < 2^n");
  const double k = std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(dim) / static_cast<double>(solutions)));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

double classical_expected_draws(unsigned num_qubits, std::uint64_t solutions) {
  const double dim = std::ldexp(1.0, static_cast<int>(num_qubits));
  return (dim + 1.0) / (static_cast<double>(solutions) + 1.0);
}

std::uint64_t count_solutions(const PredicateOracle& oracle) {
  const std::uint64_t dim = std::uint64_t{1} << oracle.num_bits();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < dim; ++x) count += oracle.peek(x) ? 1 : 0;
  return count;
}

GroverResult grover_search(PredicateOracle& oracle, std::uint64_t solutions, RandomSource& rng) {
  const std::uint64_t iterations = grover_iterations(oracle.num_bits(), solutions);
  const std::uint64_t calls_before = oracle.call_count();

  StateVector s = uniform_superposition(oracle.num_bits());
  for (std::uint64_t k = 0; k < iterations; ++k) {
    oracle_phase_flip(s, oracle);
    diffusion(s);
  }
  const BasisIndex found = measure_all(s, rng).outcome;
  const bool success = oracle.evaluate(found);
  return {found, iterations, oracle.call_count() - calls_before, success};
}

std::vector<double> grover_success_curve(PredicateOracle& oracle, std::uint64_t k_max) {
  if (oracle.num_bits() > kMaxCurveQubits) throw ResourceError("success curve limited to 16 qubits");
  const std::uint64_t solutions = count_solutions(oracle);
  const std::uint64_t dim = std::uint64_t{1} << oracle.num_bits();
  if (solutions < 1 || solutions >= dim) throw DomainError("solution count must satisfy 1 <= M < 2^n");

  std::vector<char> marked(dim);
  for (std::uint64_t x = 0; x < dim; ++x) marked[x] = oracle.peek(x);
  const auto success = [&](const StateVector& s) {
    return kernels::chunked_sum(dim, [&](std::size_t i) { return marked[i] ? std::norm(s[i]) : 0.0; });
  };

  std::vector<double> curve;
  curve.reserve(k_max + 1);
  StateVector s = uniform_superposition(oracle.num_bits());
  curve.push_back(success(s));
  for (std::uint64_t k = 0; k < k_max; ++k) {
    oracle_phase_flip(s, oracle);
    diffusion(s);
    curve.push_back(success(s));
  }
  return curve;
}

std::vector<double> grover_success_curve(unsigned num_qubits, std::uint64_t solutions, std::uint64_t k_max) {
  if (num_qubits < 1 || num_qubits > kMaxCurveQubits) throw ResourceError("success curve limited to 16 qubits");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (solutions < 1 || solutions >= dim) throw DomainError("solution count must satisfy 1 <= M < 2^n");
  PredicateOracle oracle(num_qubits, [solutions](BasisIndex x) { return x < solutions; });
  return grover_success_curve(oracle, k_max);
}

}  // namespace qsim
