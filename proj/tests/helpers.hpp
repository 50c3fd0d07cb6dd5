#pragma once

#include <random>
#include <vector>

#include "smp/model.hpp"

namespace testutil {

// Three-state illness-death style example: state 2 bounces back to 1 with
// probability 0.8 or absorbs into 3.
inline smp::Matrix example_p() {
  return smp::Matrix::from_rows({{0, 1, 0}, {0.8, 0, 0.2}, {0, 0, 1}});
}

inline smp::Matrix example_e1() {
  return smp::Matrix::from_rows({{0, 6, 0}, {0.7, 0, 1.1}, {0, 0, 0}});
}

inline smp::SmpModel example_model() {
  smp::MomentMatrixSet e;
  e.orders.push_back(example_e1());
  return {{"well", "ill", "dead"}, example_p(), std::move(e)};
}

// Same chain with exponential sojourns matching the e^(1) means (the
// absorbing self-loop is deterministic 0).
inline smp::SmpModel example_model_exponential() {
  smp::DistributionMatrix d(3);
  d.at(0, 1) = smp::Exponential{1.0 / 6.0};
  d.at(1, 0) = smp::Exponential{1.0 / 0.7};
  d.at(1, 2) = smp::Exponential{1.0 / 1.1};
  d.at(2, 2) = smp::Deterministic{0.0};
  return {{"well", "ill", "dead"}, example_p(), std::move(d)};
}

// Random stochastic matrix with varied sparsity.  Every row keeps at least
// one positive entry; reducible shapes (absorbing classes) appear often.
inline smp::Matrix random_stochastic(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  smp::Matrix p(static_cast<std::size_t>(m), static_cast<std::size_t>(m), 0.0);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int i = 0; i < m; ++i) {
    double density = 0.15 + 0.85 * unif(rng);
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      if (unif(rng) < density) {
        double w = 0.05 + unif(rng);
        p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w;
        total += w;
      }
    }
    if (total == 0.0) {
      int j = pick(rng);
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1.0;
      total = 1.0;
    }
    for (int j = 0; j < m; ++j)
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) /= total;
  }
  return p;
}

// Strictly positive stochastic matrix (irreducible, every state UA).
inline smp::Matrix random_dense_stochastic(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  smp::Matrix p(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      double w = unif(rng);
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w;
      total += w;
    }
    for (int j = 0; j < m; ++j)
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) /= total;
  }
  return p;
}

inline smp::SojournDist random_dist(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  switch (rng() % 5) {
    case 0: return smp::Deterministic{0.2 + 2.0 * unif(rng)};
    case 1: return smp::Exponential{0.5 + 2.0 * unif(rng)};
    case 2: {
      double a = unif(rng);
      return smp::Uniform{a, a + 0.2 + unif(rng)};
    }
    case 3: return smp::GammaDist{0.5 + 3.0 * unif(rng), 0.2 + unif(rng)};
    default: return smp::Lognormal{-0.5 + unif(rng), 0.1 + 0.5 * unif(rng)};
  }
}

// Dense stochastic model with mixed sojourn families on every transition.
inline smp::SmpModel random_distribution_model(std::mt19937_64& rng, int m) {
  smp::Matrix p = random_dense_stochastic(rng, m);
  smp::DistributionMatrix d(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j) > 0.0) d.at(i, j) = random_dist(rng);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("s" + std::to_string(i + 1));
  return {std::move(names), std::move(p), std::move(d)};
}

// Moment-flavored model over a given p with exponential-style moments.
inline smp::SmpModel random_moment_model(std::mt19937_64& rng,
                                         const smp::Matrix& p, int R) {
  smp::DistributionMatrix d(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j) > 0.0) d.at(i, j) = random_dist(rng);
  smp::MomentMatrixSet e = smp::moments_from_distributions(d, R);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.rows(); ++i)
    names.push_back("s" + std::to_string(i + 1));
  return {std::move(names), p, std::move(e)};
}

}  // namespace testutil
