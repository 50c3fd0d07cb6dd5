#pragma once

#include "smp/matrix.hpp"

namespace smp::linalg {

// Element-wise product.  Shapes must agree.
Matrix hadamard(const Matrix& a, const Matrix& b);

// Maximum absolute row sum.
double inf_norm(const Matrix& a);
double inf_norm(const Vector& v);

// Row-pivoted LU factorization of a square matrix, PA = LU.  The
// factorization is reused across multiple right-hand sides; pivots below
// 1e-12 * ||a||_inf raise SingularMatrixError with the pivot index.
class LuFactorization {
 public:
  explicit LuFactorization(const Matrix& a);

  // Solves a*x = b.  Applies one pass of iterative refinement when the
  // residual exceeds 1e-9 * max(1, ||b||_inf).
  Vector solve(const Vector& b) const;

  std::size_t size() const { return lu_.rows(); }

 private:
  Vector solve_raw(const Vector& b) const;

  Matrix lu_;
  Matrix original_;
  std::vector<std::size_t> perm_;
};

// One-shot convenience wrapper around LuFactorization.
Vector solve(const Matrix& a, const Vector& b);

// Spectral radius of a nonnegative square matrix via power iteration on
// a + eps*I with eps = 1e-3 (the shift breaks periodicity; eps is subtracted
// from the converged Rayleigh estimate).  Nilpotent matrices are detected
// exactly beforehand, since the defective Perron root makes the iteration
// crawl.  Accuracy |rho - true| <= 1e-8 for simple Perron roots.
double spectral_radius(const Matrix& a);

}  // namespace smp::linalg
