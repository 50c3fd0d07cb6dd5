#include "smp/model.hpp"

#include <cmath>

#include "smp/errors.hpp"

namespace smp {

const Matrix& MomentMatrixSet::order(int r) const {
  if (r < 1 || r > max_order())
    throw DomainError("moment order " + std::to_string(r) +
                      " not available (have 1.." + std::to_string(max_order()) +
                      ")");
  return orders[static_cast<std::size_t>(r - 1)];
}

std::vector<Diagnostic> validate(const SmpModel& model) {
  std::vector<Diagnostic> out;
  auto add = [&out](std::string msg) { out.push_back({std::move(msg)}); };

  const std::size_t m = model.p.rows();
  if (!model.p.square() || m < 2) {
    add("p must be m x m with m > 1");
    return out;  // later checks assume a sane shape
  }
  if (!model.state_names.empty() && model.state_names.size() != m)
    add("state name count does not match p dimension");

  bool entries_ok = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double v = model.p(i, j);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        add("p must have valid entries in [0,1]: bad entry at (" +
            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        entries_ok = false;
      }
    }
  if (entries_ok) {
    for (std::size_t i = 0; i < m; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < m; ++j) sum += model.p(i, j);
      if (std::abs(sum - 1.0) > 1e-9)
        add("p is not a stochastic matrix (row " + std::to_string(i + 1) +
            " sums to " + std::to_string(sum) + ")");
    }
  }

  if (model.has_distributions()) {
    const auto& d = model.distribution_matrix();
    if (d.m != m) {
      add("distribution matrix shape does not match p");
      return out;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (model.p(i, j) > 0.0) {
          if (!d.at(i, j)) {
            add("transition (" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) +
                ") has positive probability but no sojourn distribution");
          } else {
            try {
              validate_params(*d.at(i, j));
            } catch (const DomainError& err) {
              add("distribution at (" + std::to_string(i + 1) + "," +
                  std::to_string(j + 1) + "): " + err.what());
            }
          }
        }
      }
  } else {
    const auto& e = model.moment_set();
    if (e.orders.empty()) {
      add("moment list is empty; at least e^(1) is required");
      return out;
    }
    for (int r = 1; r <= e.max_order(); ++r) {
      const Matrix& er = e.orders[static_cast<std::size_t>(r - 1)];
      if (er.rows() != m || er.cols() != m) {
        add("p & the matrices in E must be m x m: e^(" + std::to_string(r) +
            ") has wrong shape");
        continue;
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          double v = er(i, j);
          if (!std::isfinite(v) || v < 0.0)
            add("p & E must have valid nonnegative entries: e^(" +
                std::to_string(r) + ") at (" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + ")");
        }
    }
    // Jensen: e2 >= e1^2 cellwise where the transition can occur.
    if (e.max_order() >= 2 && e.orders[0].rows() == m &&
        e.orders[1].rows() == m) {
      const Matrix& e1 = e.orders[0];
      const Matrix& e2 = e.orders[1];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (model.p(i, j) > 0.0 && e2(i, j) < e1(i, j) * e1(i, j) - 1e-12)
            add("moment inconsistency at (" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + "): e^(2) < (e^(1))^2");
    }
  }
  return out;
}

MomentMatrixSet moments_from_distributions(const DistributionMatrix& d, int R) {
  if (R < 1) throw DomainError("moment order R must be >= 1");
  MomentMatrixSet set;
  for (int r = 1; r <= R; ++r) {
    Matrix er(d.m, d.m, 0.0);
    for (std::size_t i = 0; i < d.m; ++i)
      for (std::size_t j = 0; j < d.m; ++j)
        if (d.at(i, j)) {
          validate_params(*d.at(i, j));
          er(i, j) = raw_moment(*d.at(i, j), r);
        }
    set.orders.push_back(std::move(er));
  }
  return set;
}

MomentMatrixSet sojourn_moments(const SmpModel& model, int R) {
  if (R < 1) throw DomainError("moment order R must be >= 1");
  if (model.has_distributions())
    return moments_from_distributions(model.distribution_matrix(), R);
  const auto& e = model.moment_set();
  if (e.max_order() < R)
    throw DomainError("model carries moments up to order " +
                      std::to_string(e.max_order()) + "; order " +
                      std::to_string(R) + " requested");
  MomentMatrixSet truncated;
  truncated.orders.assign(e.orders.begin(), e.orders.begin() + R);
  return truncated;
}

double kernel_at(const SmpModel& model, int i, int j, double x) {
  if (!model.has_distributions())
    throw UnsupportedOperationError(
        "kernel_at requires a distribution-flavored model");
  const std::size_t m = model.size();
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= m ||
      static_cast<std::size_t>(j) >= m)
    throw DomainError("kernel_at: state out of range");
  if (x < 0.0) throw DomainError("kernel_at: x must be >= 0");
  double pij = model.p(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  if (pij == 0.0) return 0.0;
  const auto& cell =
      model.distribution_matrix().at(static_cast<std::size_t>(i),
                                     static_cast<std::size_t>(j));
  if (!cell)
    throw DomainError("kernel_at: no distribution for transition (" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return pij * cdf(*cell, x);
}

}  // namespace smp
