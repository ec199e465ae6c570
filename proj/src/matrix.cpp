#include "qsim/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qsim {

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (rows >= 64)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(r, k);
      if (aik == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += aik * b(k, c);
    }
  }
  return out;
}

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> x) {
  if (m.cols() != x.size()) throw DomainError("matrix-vector product: size mismatch");
  std::vector<Complex> y(m.rows());
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(static) if (rows >= 256)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

std::vector<double> multiply(const RealMatrix& m, std::span<const double> x) {
  if (m.cols() != x.size()) throw DomainError("matrix-vector product: size mismatch");
  std::vector<double> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

double unitarity_deviation(const ComplexMatrix& m) {
  if (!m.square()) throw DomainError("unitarity check needs a square matrix");
  const std::size_t dim = m.rows();
  // Column-major copy so (U^dagger U)_ij = <col_i, col_j> walks contiguous memory.
  std::vector<Complex> cols(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) cols[c * dim + r] = m(r, c);

  double worst = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst) if (n >= 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Complex* ci = &cols[static_cast<std::size_t>(i) * dim];
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex* cj = &cols[j * dim];
      Complex acc{};
      for (std::size_t k = 0; k < dim; ++k) acc += std::conj(ci[k]) * cj[k];
      if (static_cast<std::size_t>(i) == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace qsim
