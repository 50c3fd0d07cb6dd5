#pragma once

#include <random>
#include <string>
#include <variant>

namespace smp {

// Sojourn-time families.  All have finite raw moments of every order and
// support contained in [0, inf).
struct Deterministic {
  double value;
};
struct Exponential {
  double rate;
};
struct Uniform {
  double lo, hi;
};
struct GammaDist {
  double shape, scale;
};
struct Lognormal {
  double mu, sigma;
};

using SojournDist =
    std::variant<Deterministic, Exponential, Uniform, GammaDist, Lognormal>;

// Throws DomainError on invalid parameters (see family constraints).
void validate_params(const SojournDist& d);

// rth raw moment, closed form per family; r >= 0.
double raw_moment(const SojournDist& d, int r);

// CDF at x (right-continuous).
double cdf(const SojournDist& d, double x);

double sample(const SojournDist& d, std::mt19937_64& rng);

std::string family_name(const SojournDist& d);

}  // namespace smp
