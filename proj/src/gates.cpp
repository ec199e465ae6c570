#include "qsim/gates.hpp"

#include <cmath>
#include <numbers>

#include "qsim/errors.hpp"
#include "qsim/kernels.hpp"

namespace qsim {

namespace {

void require_unitary(const ComplexMatrix& m) {
  if (!validate_unitary(m, kUnitaryTolerance)) throw ValidationError("gate matrix is not unitary");
}

void check_targets(const Gate& g, unsigned num_qubits) {
  for (unsigned t : g.targets())
    if (t >= num_qubits)
      throw DomainError("gate target qubit " + std::to_string(t) + " outside register of " +
                        std::to_string(num_qubits) + " qubits");
}

}  // namespace

Gate::Gate(unsigned target, ComplexMatrix matrix) : targets_{target}, matrix_(std::move(matrix)) {
  if (matrix_.rows() != 2 || matrix_.cols() != 2) throw DomainError("one-qubit gate needs a 2x2 matrix");
  require_unitary(matrix_);
}

Gate::Gate(unsigned target0, unsigned target1, ComplexMatrix matrix)
    : targets_{target0, target1}, matrix_(std::move(matrix)) {
  if (target0 == target1) throw DomainError("two-qubit gate targets must be distinct");
  if (matrix_.rows() != 4 || matrix_.cols() != 4) throw DomainError("two-qubit gate needs a 4x4 matrix");
  require_unitary(matrix_);
}

ComplexMatrix not_matrix() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix sqrt_not_matrix() {
  const double h = 1.0 / std::numbers::sqrt2;
  return ComplexMatrix{{h, -h}, {h, h}};
}

Gate not_gate(unsigned q) { return Gate(q, not_matrix()).named("NOT"); }

Gate sqrt_not_gate(unsigned q) { return Gate(q, sqrt_not_matrix()).named("SQRTNOT"); }

Gate hadamard(unsigned q) {
  const double h = 1.0 / std::numbers::sqrt2;
  return Gate(q, ComplexMatrix{{h, h}, {h, -h}}).named("H");
}

Gate phase(unsigned q, double theta) {
  return Gate(q, ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, theta)}}).named("PHASE");
}

Gate controlled_phase(unsigned control, unsigned target, double theta) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(3, 3) = std::polar(1.0, theta);
  return Gate(control, target, std::move(m)).named("CPHASE");
}

Gate controlled_not(unsigned control, unsigned target) {
  // Local index = bit(control) + 2 * bit(target); flip the target when control is set.
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(1, 3) = 1.0;
  m(3, 1) = 1.0;
  return Gate(control, target, std::move(m)).named("CNOT");
}

Circuit& Circuit::add(Gate g) {
  check_targets(g, num_qubits_);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::add_swap(unsigned a, unsigned b) {
  add(controlled_not(a, b));
  add(controlled_not(b, a));
  add(controlled_not(a, b));
  return *this;
}

bool validate_unitary(const ComplexMatrix& m, double tol) {
  if (!m.square()) throw DomainError("unitarity check needs a square matrix");
  return unitarity_deviation(m) < tol;
}

ComplexMatrix embed_gate_dense(const Gate& g, unsigned num_qubits) {
  if (num_qubits > kMaxDenseQubits)
    throw ResourceError("dense embedding limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  check_targets(g, num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::size_t target_mask = 0;
  for (unsigned t : g.targets()) target_mask |= std::size_t{1} << t;

  const auto local = [&](std::size_t index) {
    std::size_t l = 0;
    for (std::size_t k = 0; k < g.arity(); ++k) l |= ((index >> g.targets()[k]) & 1U) << k;
    return l;
  };

  ComplexMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if ((i & ~target_mask) == (j & ~target_mask)) out(i, j) = g.matrix()(local(i), local(j));
  return out;
}

void apply_gate(StateVector& s, const Gate& g) {
  check_targets(g, s.num_qubits());
  const auto m = g.matrix().data();
  if (g.arity() == 1) {
    kernels::apply_local_1<Complex>(s.amplitudes(), g.targets()[0], m.first<4>());
  } else {
    kernels::apply_local_2<Complex>(s.amplitudes(), g.targets()[0], g.targets()[1], m.first<16>());
  }
}

void apply_gate_serial(StateVector& s, const Gate& g) {
  check_targets(g, s.num_qubits());
  const auto m = g.matrix().data();
  if (g.arity() == 1) {
    kernels::serial::apply_local_1<Complex>(s.amplitudes(), g.targets()[0], m.first<4>());
  } else {
    kernels::serial::apply_local_2<Complex>(s.amplitudes(), g.targets()[0], g.targets()[1], m.first<16>());
  }
}

void run_circuit(StateVector& s, const Circuit& c) {
  if (c.num_qubits() != s.num_qubits())
    throw DomainError("circuit has " + std::to_string(c.num_qubits()) + " qubits, state has " +
                      std::to_string(s.num_qubits()));
  for (const Gate& g : c.gates()) apply_gate(s, g);
}

QubitMeasurement measure_qubit(const StateVector& s, unsigned q, RandomSource& rng) {
  if (q >= s.num_qubits()) throw DomainError("measured qubit outside register");
  const std::size_t bit = std::size_t{1} << q;
  const auto amps = s.amplitudes();
  const double p1 = kernels::chunked_sum(amps.size(), [&](std::size_t i) {
    return (i & bit) ? std::norm(amps[i]) : 0.0;
  });
  const double p0 = kernels::chunked_sum(amps.size(), [&](std::size_t i) {
    return (i & bit) ? 0.0 : std::norm(amps[i]);
  });
  if (p0 < 1e-12 && p1 < 1e-12) throw StateCorruptionError("measure_qubit: both branches are empty");

  const unsigned outcome = rng.uniform() * (p0 + p1) < p0 ? 0U : 1U;
  const double keep = outcome ? p1 : p0;
  const double scale = 1.0 / std::sqrt(keep);

  std::vector<Complex> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (((i & bit) != 0) == (outcome == 1U)) out[i] = amps[i] * scale;
  return {outcome, StateVector::from_amplitudes(std::move(out))};
}

}  // namespace qsim
