#include "smp/matrix.hpp"

#include <cmath>
#include <string>

namespace smp {

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionError("matrix dimensions must be at least 1x1");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw DimensionError("ragged row lengths in matrix literal");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void Matrix::check_finite(const char* context) const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!std::isfinite((*this)(i, j)))
        throw DomainError(std::string(context) + ": non-finite entry at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")");
}

void Matrix::check_nonnegative(const char* context) const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!((*this)(i, j) >= 0.0))
        throw DomainError(std::string(context) + ": negative entry at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")");
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size())
    throw DimensionError("matrix-vector shape mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace smp
