#include "qsim/classical.hpp"

#include <bit>
#include <cmath>

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/kernels.hpp"

namespace qsim {

namespace {

void require_stochastic(const RealMatrix& m) {
  if (!validate_stochastic(m, kStochasticTolerance)) throw ValidationError("matrix is not column-stochastic");
}

void check_targets(const LocalStochasticOp& op, unsigned num_bits) {
  for (unsigned t : op.targets())
    if (t >= num_bits) throw DomainError("stochastic op target outside register");
}

void clamp_negatives(std::span<double> probs) {
  for (double& p : probs) {
    if (p >= 0.0) continue;
    if (p < kNegativeClamp) throw StateCorruptionError("probability went negative beyond rounding noise");
    p = 0.0;
  }
}

}  // namespace

ProbVector ProbVector::point_mass(unsigned num_bits, BasisIndex index) {
  if (num_bits < 1 || num_bits > 40) throw DomainError("bit count out of range");
  const std::size_t dim = std::size_t{1} << num_bits;
  if (index >= dim) throw DomainError("point mass index out of range");
  std::vector<double> p(dim, 0.0);
  p[index] = 1.0;
  return ProbVector(num_bits, std::move(p));
}

ProbVector ProbVector::uniform(unsigned num_bits) {
  if (num_bits < 1 || num_bits > 40) throw DomainError("bit count out of range");
  const std::size_t dim = std::size_t{1} << num_bits;
  return ProbVector(num_bits, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ProbVector ProbVector::from_probs(std::vector<double> probs) {
  const std::size_t dim = probs.size();
  if (dim < 2 || !std::has_single_bit(dim)) throw DomainError("probability count must be a power of two >= 2");
  for (double p : probs)
    if (!(p >= kNegativeClamp)) throw DomainError("negative probability");
  clamp_negatives(probs);
  if (std::abs(kernels::sum_values(probs) - 1.0) > kStochasticTolerance)
    throw DomainError("probabilities do not sum to one");
  return ProbVector(static_cast<unsigned>(std::countr_zero(dim)), std::move(probs));
}

double l1_norm(const ProbVector& p) {
  return kernels::chunked_sum(p.dimension(), [&](std::size_t i) { return std::abs(p[i]); });
}

LocalStochasticOp::LocalStochasticOp(unsigned target, RealMatrix matrix)
    : targets_{target}, matrix_(std::move(matrix)) {
  if (matrix_.rows() != 2 || matrix_.cols() != 2) throw DomainError("one-bit op needs a 2x2 matrix");
  require_stochastic(matrix_);
}

LocalStochasticOp::LocalStochasticOp(unsigned target0, unsigned target1, RealMatrix matrix)
    : targets_{target0, target1}, matrix_(std::move(matrix)) {
  if (target0 == target1) throw DomainError("two-bit op targets must be distinct");
  if (matrix_.rows() != 4 || matrix_.cols() != 4) throw DomainError("two-bit op needs a 4x4 matrix");
  require_stochastic(matrix_);
}

LocalStochasticOp LocalStochasticOp::deterministic(unsigned target, RealMatrix matrix) {
  if (!validate_deterministic(matrix)) throw ValidationError("matrix is not a deterministic 0/1 map");
  return LocalStochasticOp(target, std::move(matrix));
}

LocalStochasticOp LocalStochasticOp::deterministic(unsigned target0, unsigned target1, RealMatrix matrix) {
  if (!validate_deterministic(matrix)) throw ValidationError("matrix is not a deterministic 0/1 map");
  return LocalStochasticOp(target0, target1, std::move(matrix));
}

bool validate_deterministic(const RealMatrix& m) {
  if (!m.square()) throw DomainError("deterministic check needs a square matrix");
  for (double v : m.data())
    if (v != 0.0 && v != 1.0) throw DomainError("deterministic matrix entries must be 0 or 1");
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int ones = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) ones += m(r, c) == 1.0;
    if (ones != 1) return false;
  }
  return true;
}

bool validate_stochastic(const RealMatrix& m, double tol) {
  if (!m.square()) return false;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!(m(r, c) >= 0.0)) return false;
      sum += m(r, c);
    }
    if (std::abs(sum - 1.0) >= tol) return false;
  }
  return true;
}

void apply_local_stochastic(ProbVector& p, const LocalStochasticOp& op) {
  check_targets(op, p.num_bits());
  const auto m = op.matrix().data();
  if (op.arity() == 1) {
    kernels::apply_local_1<double>(p.probs(), op.targets()[0], m.first<4>());
  } else {
    kernels::apply_local_2<double>(p.probs(), op.targets()[0], op.targets()[1], m.first<16>());
  }
  clamp_negatives(p.probs());
}

void apply_local_stochastic_serial(ProbVector& p, const LocalStochasticOp& op) {
  check_targets(op, p.num_bits());
  const auto m = op.matrix().data();
  if (op.arity() == 1) {
    kernels::serial::apply_local_1<double>(p.probs(), op.targets()[0], m.first<4>());
  } else {
    kernels::serial::apply_local_2<double>(p.probs(), op.targets()[0], op.targets()[1], m.first<16>());
  }
  clamp_negatives(p.probs());
}

RealMatrix embed_stochastic_dense(const LocalStochasticOp& op, unsigned num_bits) {
  if (num_bits > kMaxDenseQubits) throw ResourceError("dense embedding limited to 12 bits");
  check_targets(op, num_bits);
  const std::size_t dim = std::size_t{1} << num_bits;
  std::size_t mask = 0;
  for (unsigned t : op.targets()) mask |= std::size_t{1} << t;
  const auto local = [&](std::size_t index) {
    std::size_t l = 0;
    for (std::size_t k = 0; k < op.arity(); ++k) l |= ((index >> op.targets()[k]) & 1U) << k;
    return l;
  };
  RealMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if ((i & ~mask) == (j & ~mask)) out(i, j) = op.matrix()(local(i), local(j));
  return out;
}

ProbVector quantum_to_distribution(const StateVector& s) {
  require_normalized(s, "quantum_to_distribution");
  std::vector<double> p(s.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(s[i]);
  return ProbVector::from_probs(std::move(p));
}

RealMatrix fair_coin_matrix() { return RealMatrix{{0.5, 0.5}, {0.5, 0.5}}; }

}  // namespace qsim
