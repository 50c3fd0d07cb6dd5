#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "smp/errors.hpp"

namespace smp {

using Vector = std::vector<double>;

// Dense real matrix, row-major.  Entries are expected to be finite; ops that
// ingest external data call check_finite().
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0)
      throw DimensionError("matrix dimensions must be at least 1x1");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix ones(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, 1.0);
  }

  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  // Throws DomainError on NaN/Inf.
  void check_finite(const char* context) const;
  void check_nonnegative(const char* context) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

// Matrix-vector product.
Vector operator*(const Matrix& a, const Vector& x);

}  // namespace smp
