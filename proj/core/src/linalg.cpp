#include "smp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace smp::linalg {

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw DimensionError("hadamard: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double inf_norm(const Vector& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

LuFactorization::LuFactorization(const Matrix& a)
    : lu_(a), original_(a), perm_(a.rows()) {
  if (!a.square()) throw DimensionError("lu: matrix must be square");
  const std::size_t n = a.rows();
  const double threshold = 1e-12 * inf_norm(a);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double pivot_mag = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > pivot_mag) {
        pivot_mag = std::abs(lu_(i, k));
        pivot_row = i;
      }
    }
    if (!(pivot_mag >= threshold) || pivot_mag == 0.0)
      throw SingularMatrixError(
          k, "matrix is singular to working precision at pivot " +
                 std::to_string(k + 1));
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(lu_(k, j), lu_(pivot_row, j));
      std::swap(perm_[k], perm_[pivot_row]);
    }
    const double pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu_(i, k) / pivot;
      lu_(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

Vector LuFactorization::solve_raw(const Vector& b) const {
  const std::size_t n = size();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
    x[ii] /= lu_(ii, ii);
  }
  return x;
}

Vector LuFactorization::solve(const Vector& b) const {
  if (b.size() != size()) throw DimensionError("solve: rhs length mismatch");
  Vector x = solve_raw(b);
  const double bound = 1e-9 * std::max(1.0, inf_norm(b));
  for (int pass = 0; pass < 2; ++pass) {
    Vector r = original_ * x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    if (inf_norm(r) <= bound) break;
    Vector dx = solve_raw(r);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  }
  return x;
}

Vector solve(const Matrix& a, const Vector& b) {
  return LuFactorization(a).solve(b);
}

namespace {

// (A^k) 1 vanishes for some k <= m iff A is nilpotent; no cancellation can
// occur for nonnegative A, so the test is exact.
bool is_nilpotent(const Matrix& a) {
  const std::size_t n = a.rows();
  Vector z(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    z = a * z;
    double mx = inf_norm(z);
    if (mx == 0.0) return true;
    for (double& v : z) v /= mx;
  }
  return false;
}

}  // namespace

double spectral_radius(const Matrix& a) {
  if (!a.square()) throw DimensionError("spectral_radius: non-square matrix");
  a.check_nonnegative("spectral_radius");
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (is_nilpotent(a)) return 0.0;

  constexpr double shift = 1e-3;
  constexpr double tol = 1e-12;
  constexpr int max_iter = 100000;

  Vector v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda_prev = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vector w = a * v;
    for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += v[i] * w[i];
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : w) x /= norm;
    v = std::move(w);
    if (it > 0 && std::abs(lambda - lambda_prev) < tol)
      return lambda - shift;
    lambda_prev = lambda;
  }
  throw IterationLimitError(
      "spectral_radius: power iteration did not converge in 100000 steps");
}

}  // namespace smp::linalg
