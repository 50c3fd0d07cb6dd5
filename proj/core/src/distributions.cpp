#include "smp/distributions.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "smp/errors.hpp"

namespace smp {

namespace {

struct Validate {
  void operator()(const Deterministic& d) const {
    if (!std::isfinite(d.value) || d.value < 0.0)
      throw DomainError("deterministic: value must be finite and >= 0");
  }
  void operator()(const Exponential& d) const {
    if (!std::isfinite(d.rate) || d.rate <= 0.0)
      throw DomainError("exponential: rate must be finite and > 0");
  }
  void operator()(const Uniform& d) const {
    if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || d.lo < 0.0 ||
        d.lo >= d.hi)
      throw DomainError("uniform: requires 0 <= a < b, both finite");
  }
  void operator()(const GammaDist& d) const {
    if (!std::isfinite(d.shape) || !std::isfinite(d.scale) || d.shape <= 0.0 ||
        d.scale <= 0.0)
      throw DomainError("gamma: shape and scale must be finite and > 0");
  }
  void operator()(const Lognormal& d) const {
    if (!std::isfinite(d.mu) || !std::isfinite(d.sigma) || d.sigma < 0.0)
      throw DomainError("lognormal: mu finite, sigma finite and >= 0");
  }
};

// Uniform draw in [0, 1) with 53 random bits.
double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate_params(const SojournDist& d) { std::visit(Validate{}, d); }

double raw_moment(const SojournDist& d, int r) {
  if (r < 0) throw DomainError("raw_moment: order must be >= 0");
  if (r == 0) return 1.0;
  return std::visit(
      [r](const auto& dist) -> double {
        using T = std::decay_t<decltype(dist)>;
        if constexpr (std::is_same_v<T, Deterministic>) {
          return std::pow(dist.value, r);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          double m = 1.0;
          for (int t = 1; t <= r; ++t) m *= t / dist.rate;
          return m;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return (std::pow(dist.hi, r + 1) - std::pow(dist.lo, r + 1)) /
                 ((r + 1) * (dist.hi - dist.lo));
        } else if constexpr (std::is_same_v<T, GammaDist>) {
          // theta^r * Gamma(k+r)/Gamma(k) = theta^r * k(k+1)...(k+r-1)
          double m = 1.0;
          for (int t = 0; t < r; ++t) m *= dist.scale * (dist.shape + t);
          return m;
        } else {
          return std::exp(r * dist.mu + 0.5 * r * r * dist.sigma * dist.sigma);
        }
      },
      d);
}

double cdf(const SojournDist& d, double x) {
  if (x < 0.0) return 0.0;
  return std::visit(
      [x](const auto& dist) -> double {
        using T = std::decay_t<decltype(dist)>;
        if constexpr (std::is_same_v<T, Deterministic>) {
          return x >= dist.value ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::expm1(-dist.rate * x);
        } else if constexpr (std::is_same_v<T, Uniform>) {
          if (x <= dist.lo) return 0.0;
          if (x >= dist.hi) return 1.0;
          return (x - dist.lo) / (dist.hi - dist.lo);
        } else if constexpr (std::is_same_v<T, GammaDist>) {
          return boost::math::gamma_p(dist.shape, x / dist.scale);
        } else {
          if (dist.sigma == 0.0) return x >= std::exp(dist.mu) ? 1.0 : 0.0;
          if (x == 0.0) return 0.0;
          return 0.5 * std::erfc(-(std::log(x) - dist.mu) /
                                 (dist.sigma * std::sqrt(2.0)));
        }
      },
      d);
}

double sample(const SojournDist& d, std::mt19937_64& rng) {
  return std::visit(
      [&rng](const auto& dist) -> double {
        using T = std::decay_t<decltype(dist)>;
        if constexpr (std::is_same_v<T, Deterministic>) {
          return dist.value;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-canonical(rng)) / dist.rate;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return dist.lo + (dist.hi - dist.lo) * canonical(rng);
        } else if constexpr (std::is_same_v<T, GammaDist>) {
          std::gamma_distribution<double> g(dist.shape, dist.scale);
          return g(rng);
        } else {
          if (dist.sigma == 0.0) return std::exp(dist.mu);
          std::lognormal_distribution<double> g(dist.mu, dist.sigma);
          return g(rng);
        }
      },
      d);
}

std::string family_name(const SojournDist& d) {
  return std::visit(
      [](const auto& dist) -> std::string {
        using T = std::decay_t<decltype(dist)>;
        if constexpr (std::is_same_v<T, Deterministic>) return "deterministic";
        else if constexpr (std::is_same_v<T, Exponential>) return "exponential";
        else if constexpr (std::is_same_v<T, Uniform>) return "uniform";
        else if constexpr (std::is_same_v<T, GammaDist>) return "gamma";
        else return "lognormal";
      },
      d);
}

}  // namespace smp
