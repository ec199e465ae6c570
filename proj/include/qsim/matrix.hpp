#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

using Complex = std::complex<double>;

/// Dense row-major matrix. Used for small gate matrices and as the dense test
/// oracle for embedded gates and the Fourier transform.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Row-major nested initializer: Matrix<double>{{0, 1}, {1, 0}}.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// y = M x
std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> x);
std::vector<double> multiply(const RealMatrix& m, std::span<const double> x);

// max_ij |(M^dagger M - I)_ij|, computed without materializing the product.
double unitarity_deviation(const ComplexMatrix& m);

}  // namespace qsim
