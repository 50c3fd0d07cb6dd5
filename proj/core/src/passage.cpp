#include "smp/passage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smp/graph.hpp"
#include "smp/linalg.hpp"

namespace smp::passage {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxOrder)
    throw DomainError("binomial: need 0 <= k <= n <= " +
                      std::to_string(kMaxOrder));
  std::uint64_t result = 1;
  k = std::min(k, n - k);
  for (int t = 1; t <= k; ++t) {
    result = result * static_cast<std::uint64_t>(n - k + t) /
             static_cast<std::uint64_t>(t);
  }
  return result;
}

Matrix masked_transition(const Matrix& p, int j) {
  if (!p.square()) throw DimensionError("masked_transition: p must be square");
  if (j < 0 || static_cast<std::size_t>(j) >= p.rows())
    throw DomainError("masked_transition: state out of range");
  Matrix a = p;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, static_cast<std::size_t>(j)) = 0.0;
  return a;
}

struct PassageSolver::Impl {
  SmpModel model;
  int target;
  linalg::LuFactorization lu;

  Impl(SmpModel m, int j, const Matrix& system)
      : model(std::move(m)), target(j), lu(system) {}
};

PassageSolver::PassageSolver(const SmpModel& model, int target) {
  auto diags = validate(model);
  if (!diags.empty())
    throw DomainError("invalid model: " + diags.front().message);
  const std::size_t m = model.size();
  if (target < 0 || static_cast<std::size_t>(target) >= m)
    throw DomainError("target state out of range");

  auto g = graph::digraph_of(model.p);
  auto unreachable = graph::unreachable_sources(g, target);
  if (!unreachable.empty()) {
    std::string msg = "state " + std::to_string(target + 1) +
                      " is not universally accessible; no path from state(s)";
    for (int s : unreachable) msg += " " + std::to_string(s + 1);
    throw UaViolationError(target, std::move(unreachable), msg);
  }

  Matrix system = Matrix::identity(m);
  Matrix masked = masked_transition(model.p, target);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) system(i, j) -= masked(i, j);
  try {
    impl_ = std::make_unique<Impl>(model, target, system);
  } catch (const SingularMatrixError& err) {
    // The graph test is authoritative: UA holds, so the factorization must
    // succeed.  Reaching this means the two routes disagree.
    throw InternalInconsistencyError(
        std::string("I - p*I(-j) singular although target is UA: ") +
        err.what());
  }
}

PassageSolver::~PassageSolver() = default;
PassageSolver::PassageSolver(PassageSolver&&) noexcept = default;
PassageSolver& PassageSolver::operator=(PassageSolver&&) noexcept = default;

bool PassageSolver::target_is_absorbing() const {
  const Matrix& p = impl_->model.p;
  auto j = static_cast<std::size_t>(impl_->target);
  return p(j, j) >= 1.0 - 1e-12;
}

Vector PassageSolver::first_moment() const {
  return moments(1).order(1);
}

PassageMoments PassageSolver::moments(int R) const {
  if (R < 1) throw DomainError("moment order R must be >= 1");
  if (R > kMaxOrder)
    throw DomainError("moment order R > " + std::to_string(kMaxOrder) +
                      " not supported");
  const SmpModel& model = impl_->model;
  const std::size_t m = model.size();
  const int j = impl_->target;
  MomentMatrixSet e = sojourn_moments(model, R);

  // Hadamard mask (J - I)_j: all-ones vector with entry j zeroed.
  Vector mask(m, 1.0);
  mask[static_cast<std::size_t>(j)] = 0.0;

  PassageMoments pm;
  pm.target = j;
  const Vector ones(m, 1.0);
  for (int r = 1; r <= R; ++r) {
    Matrix pe_r = linalg::hadamard(model.p, e.order(r));
    Vector rhs = pe_r * ones;
    for (int s = 1; s <= r - 1; ++s) {
      Matrix pe = linalg::hadamard(model.p, e.order(r - s));
      Vector masked_mu(m);
      const Vector& mu_s = pm.order(s);
      for (std::size_t i = 0; i < m; ++i) masked_mu[i] = mask[i] * mu_s[i];
      Vector term = pe * masked_mu;
      const double coef = static_cast<double>(binomial(r, s));
      for (std::size_t i = 0; i < m; ++i) rhs[i] += coef * term[i];
    }
    pm.orders.push_back(impl_->lu.solve(rhs));
  }
  return pm;
}

Vector first_moment(const SmpModel& model, int target) {
  return PassageSolver(model, target).first_moment();
}

PassageMoments higher_moments(const SmpModel& model, int target, int R) {
  return PassageSolver(model, target).moments(R);
}

double verify_first_step(const SmpModel& model, const PassageMoments& pm) {
  const std::size_t m = model.size();
  const int R = pm.max_order();
  const auto j = static_cast<std::size_t>(pm.target);
  MomentMatrixSet e = sojourn_moments(model, R);

  double worst = 0.0;
  for (int r = 1; r <= R; ++r) {
    const Vector& mu_r = pm.order(r);
    for (std::size_t i = 0; i < m; ++i) {
      // mu_ij^(r) = sum_k p_ik e_ik^(r)
      //           + sum_{s=1..r} C(r,s) sum_{k != j} p_ik e_ik^(r-s) mu_kj^(s)
      double rhs = 0.0;
      for (std::size_t k = 0; k < m; ++k)
        rhs += model.p(i, k) * e.order(r)(i, k);
      for (int s = 1; s <= r; ++s) {
        const double coef = static_cast<double>(binomial(r, s));
        const Vector& mu_s = pm.order(s);
        for (std::size_t k = 0; k < m; ++k) {
          if (k == j) continue;
          double e_low = (r == s) ? 1.0 : e.order(r - s)(i, k);
          rhs += coef * model.p(i, k) * e_low * mu_s[k];
        }
      }
      worst = std::max(worst, std::abs(mu_r[i] - rhs));
    }
  }
  return worst;
}

}  // namespace smp::passage
