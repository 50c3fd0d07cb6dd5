#include "smp/sim.hpp"

#include <cmath>

#include "smp/errors.hpp"
#include "smp/graph.hpp"

namespace smp::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int draw_categorical(std::span<const double> weights, std::mt19937_64& rng) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double acc = 0.0;
  int last_positive = -1;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0.0) continue;
    last_positive = static_cast<int>(k);
    acc += weights[k];
    if (u < acc) return static_cast<int>(k);
  }
  // Row sums to 1 within tolerance; round-off can leave u just past acc.
  if (last_positive < 0) throw DomainError("cannot draw from an all-zero row");
  return last_positive;
}

void require_distribution_model(const SmpModel& model, const char* op) {
  if (!model.has_distributions())
    throw UnsupportedOperationError(
        std::string(op) + " requires a distribution-flavored model");
}

const SojournDist& dist_at(const SmpModel& model, int i, int j) {
  const auto& cell = model.distribution_matrix().at(
      static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  if (!cell)
    throw DomainError("missing sojourn distribution for transition (" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return *cell;
}

bool absorbing(const SmpModel& model, int s) {
  auto ss = static_cast<std::size_t>(s);
  return model.p(ss, ss) >= 1.0 - 1e-12;
}

int initial_state_for(const SmpModel& model, const SimConfig& cfg,
                      std::mt19937_64& rng) {
  if (std::holds_alternative<int>(cfg.initial_state)) {
    int s = std::get<int>(cfg.initial_state);
    if (s < 0 || static_cast<std::size_t>(s) >= model.size())
      throw DomainError("initial state out of range");
    return s;
  }
  const Vector& w = std::get<Vector>(cfg.initial_state);
  if (w.size() != model.size())
    throw DomainError("initial distribution length mismatch");
  return draw_categorical(w, rng);
}

void check_config(const SimConfig& cfg) {
  if (cfg.replications < 1) throw DomainError("replications must be >= 1");
  if (cfg.max_transitions < 1) throw DomainError("max_transitions must be >= 1");
}

}  // namespace

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t replication) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ replication));
}

estimate::TransitionTrace simulate_trace(const SmpModel& model,
                                         const SimConfig& cfg) {
  require_distribution_model(model, "simulate_trace");
  check_config(cfg);
  auto diags = validate(model);
  if (!diags.empty())
    throw DomainError("invalid model: " + diags.front().message);

  estimate::TransitionTrace trace;
  for (long rep = 0; rep < cfg.replications; ++rep) {
    auto rng = substream(cfg.seed, static_cast<std::uint64_t>(rep));
    int state = initial_state_for(model, cfg, rng);
    for (long t = 0; t < cfg.max_transitions; ++t) {
      bool at_absorbing = absorbing(model, state);
      int next = draw_categorical(model.p.row(static_cast<std::size_t>(state)),
                                  rng);
      double x = sample(dist_at(model, state, next), rng);
      trace.records.push_back({rep, state, next, x});
      if (at_absorbing) break;  // one recorded self-loop, then stop
      state = next;
    }
  }
  return trace;
}

EmpiricalMoments empirical_passage(const SmpModel& model, int target,
                                   const SimConfig& cfg, int R) {
  require_distribution_model(model, "empirical_passage");
  check_config(cfg);
  if (R < 1) throw DomainError("moment order R must be >= 1");
  auto diags = validate(model);
  if (!diags.empty())
    throw DomainError("invalid model: " + diags.front().message);
  const std::size_t m = model.size();
  if (target < 0 || static_cast<std::size_t>(target) >= m)
    throw DomainError("target state out of range");
  {
    auto g = graph::digraph_of(model.p);
    auto unreachable = graph::unreachable_sources(g, target);
    if (!unreachable.empty()) {
      std::string msg = "state " + std::to_string(target + 1) +
                        " is not universally accessible; no path from state(s)";
      for (int s : unreachable) msg += " " + std::to_string(s + 1);
      throw UaViolationError(target, std::move(unreachable), msg);
    }
  }

  EmpiricalMoments out;
  out.target = target;
  out.replications_per_source = cfg.replications;
  out.moment.assign(static_cast<std::size_t>(R), Vector(m, 0.0));
  out.se.assign(static_cast<std::size_t>(R), Vector(m, 0.0));
  out.censored.assign(m, 0);

  for (std::size_t src = 0; src < m; ++src) {
    // (count, sum, sum of squares) per order
    std::vector<double> sum(static_cast<std::size_t>(R), 0.0);
    std::vector<double> sum_sq(static_cast<std::size_t>(R), 0.0);
    long used = 0;
    for (long rep = 0; rep < cfg.replications; ++rep) {
      auto rng = substream(cfg.seed,
                           static_cast<std::uint64_t>(rep) * m + src + 1);
      int state = static_cast<int>(src);
      double t_passage = 0.0;
      bool hit = false;
      for (long t = 0; t < cfg.max_transitions; ++t) {
        int next = draw_categorical(
            model.p.row(static_cast<std::size_t>(state)), rng);
        t_passage += sample(dist_at(model, state, next), rng);
        state = next;
        if (state == target) {  // passage needs at least one transition
          hit = true;
          break;
        }
      }
      if (!hit) {
        ++out.censored[src];
        continue;
      }
      ++used;
      double xp = 1.0;
      for (int r = 1; r <= R; ++r) {
        xp *= t_passage;
        sum[static_cast<std::size_t>(r - 1)] += xp;
        sum_sq[static_cast<std::size_t>(r - 1)] += xp * xp;
      }
    }
    for (int r = 1; r <= R; ++r) {
      auto ri = static_cast<std::size_t>(r - 1);
      if (used == 0) {
        out.moment[ri][src] = std::nan("");
        out.se[ri][src] = std::nan("");
        continue;
      }
      double mean = sum[ri] / static_cast<double>(used);
      out.moment[ri][src] = mean;
      if (used > 1) {
        double var = (sum_sq[ri] - static_cast<double>(used) * mean * mean) /
                     static_cast<double>(used - 1);
        out.se[ri][src] = std::sqrt(std::max(0.0, var) /
                                    static_cast<double>(used));
      }
    }
  }
  return out;
}

}  // namespace smp::sim
