#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "smp/estimate.hpp"
#include "smp/model.hpp"

namespace smp::sim {

struct SimConfig {
  std::uint64_t seed = 0;
  long replications = 1;
  long max_transitions = 1'000'000;  // regularity guard per replication
  // Fixed 0-based start state, or a categorical distribution over states.
  std::variant<int, Vector> initial_state = 0;
};

// Empirical first-passage moment estimates, one row per source state.
struct EmpiricalMoments {
  int target = 0;
  long replications_per_source = 0;
  // moment[r-1][i] and se[r-1][i]: sample mean and standard error of T_j^r
  // starting from source i.
  std::vector<Vector> moment;
  std::vector<Vector> se;
  std::vector<long> censored;  // replications that hit max_transitions
};

// Independent per-replication substream: identical (seed, rep) always yields
// the same generator regardless of execution order.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t replication);

// Simulates the Markov renewal sequence per replication: states drawn from
// the rows of p, sojourns from F.  A replication ends at max_transitions or
// one transition after entering an absorbing state (that final self-loop is
// recorded so the estimated digraph keeps the absorbing cycle).
estimate::TransitionTrace simulate_trace(const SmpModel& model,
                                         const SimConfig& cfg);

// Monte Carlo first-passage moments to target j (first return when starting
// at j).  cfg.replications replications per source state; censored runs are
// excluded from the moments and counted.
EmpiricalMoments empirical_passage(const SmpModel& model, int target,
                                   const SimConfig& cfg, int R);

}  // namespace smp::sim
