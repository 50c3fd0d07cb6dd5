#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "smp/model.hpp"

namespace smp::passage {

// Moment vectors mu_j^(1..R) for a fixed target j; mu(r)[i] is the rth moment
// of first passage from i to j (first return when i == j).
struct PassageMoments {
  int target = 0;
  std::vector<Vector> orders;  // orders[r-1] = mu_j^(r)

  int max_order() const { return static_cast<int>(orders.size()); }
  const Vector& order(int r) const { return orders[static_cast<std::size_t>(r - 1)]; }
};

constexpr int kMaxOrder = 20;  // binomials kept in exact integer arithmetic

// Exact C(n, k) for n <= kMaxOrder.
std::uint64_t binomial(int n, int k);

// Copy of p with column j zeroed; realizes p*I(-j).
Matrix masked_transition(const Matrix& p, int j);

// Reusable solver for one (model, target) pair.  Checks model validity and
// universal accessibility of the target up front, then factorizes
// I - p*I(-j) once for all moment orders.
class PassageSolver {
 public:
  PassageSolver(const SmpModel& model, int target);
  ~PassageSolver();
  PassageSolver(PassageSolver&&) noexcept;
  PassageSolver& operator=(PassageSolver&&) noexcept;

  Vector first_moment() const;
  PassageMoments moments(int R) const;

  // The target can only be left through its self-loop.
  bool target_is_absorbing() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Vector first_moment(const SmpModel& model, int target);
PassageMoments higher_moments(const SmpModel& model, int target, int R);

// Maximum absolute residual of the componentwise first-step equations for
// every computed order.  Contract: <= 1e-8 * (1 + ||mu||_inf).
double verify_first_step(const SmpModel& model, const PassageMoments& pm);

}  // namespace smp::passage
