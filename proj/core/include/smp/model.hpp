#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smp/distributions.hpp"
#include "smp/matrix.hpp"

namespace smp {

// Conditional sojourn moment matrices e^(1)..e^(R).
struct MomentMatrixSet {
  std::vector<Matrix> orders;  // orders[r-1] holds e^(r)

  int max_order() const { return static_cast<int>(orders.size()); }
  const Matrix& order(int r) const;  // r in 1..max_order
};

// Per-transition sojourn distributions; only cells with p(i,j) > 0 need one.
struct DistributionMatrix {
  std::size_t m = 0;
  std::vector<std::optional<SojournDist>> cells;  // row-major m*m

  explicit DistributionMatrix(std::size_t m_ = 0) : m(m_), cells(m_ * m_) {}
  std::optional<SojournDist>& at(std::size_t i, std::size_t j) {
    return cells[i * m + j];
  }
  const std::optional<SojournDist>& at(std::size_t i, std::size_t j) const {
    return cells[i * m + j];
  }
};

struct SmpModel {
  std::vector<std::string> state_names;
  Matrix p;
  std::variant<MomentMatrixSet, DistributionMatrix> sojourn;

  std::size_t size() const { return p.rows(); }
  bool has_distributions() const {
    return std::holds_alternative<DistributionMatrix>(sojourn);
  }
  const MomentMatrixSet& moment_set() const {
    return std::get<MomentMatrixSet>(sojourn);
  }
  const DistributionMatrix& distribution_matrix() const {
    return std::get<DistributionMatrix>(sojourn);
  }
};

struct Diagnostic {
  std::string message;
};

// Empty iff every model invariant holds.  Violations are reported, never
// thrown.
std::vector<Diagnostic> validate(const SmpModel& model);

// Closed-form raw moments per cell up to order R.  Cells without a
// distribution get zeros (only valid where p is zero; validate() flags the
// rest).
MomentMatrixSet moments_from_distributions(const DistributionMatrix& d, int R);

// Lowers either flavor to moment matrices of order >= R.  Throws DomainError
// when a moment-flavored model lacks order R.
MomentMatrixSet sojourn_moments(const SmpModel& model, int R);

// Q_ij(x) = p_ij * F_ij(x).  Distribution-flavored models only.
double kernel_at(const SmpModel& model, int i, int j, double x);

}  // namespace smp
