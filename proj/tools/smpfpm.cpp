// smpfpm: first-passage moment analysis of finite-state semi-Markov models.
//
// Subcommands: check, analyze, moments, simulate, estimate.
// JSON report on stdout, human summary on stderr (suppressed by --json-only).
// Exit codes: 0 success, 1 validation/parse failure, 2 target not universally
// accessible, 3 internal inconsistency between the graph test and the solver.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smp/errors.hpp"
#include "smp/estimate.hpp"
#include "smp/graph.hpp"
#include "smp/model.hpp"
#include "smp/model_io.hpp"
#include "smp/passage.hpp"
#include "smp/sim.hpp"
#include "smp/trace_io.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json_only = false;
};

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ordered_json vector_json(const smp::Vector& v) {
  ordered_json out = ordered_json::array();
  for (double x : v) out.push_back(x);
  return out;
}

ordered_json model_digest(const smp::SmpModel& model) {
  return {{"m", model.size()},
          {"flavor", model.has_distributions() ? "distributions" : "moments"}};
}

ordered_json structure_json(const smp::graph::StructureReport& report) {
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    ordered_json states = ordered_json::array();
    for (int s : report.classes[c]) states.push_back(s + 1);
    classes.push_back(
        {{"states", std::move(states)},
         {"kind", report.kinds[c] == smp::graph::BlockKind::recurrent
                      ? "recurrent"
                      : "transient"},
         {"spectral_radius", report.radii[c]}});
  }
  ordered_json ua = ordered_json::array();
  for (int s : report.ua_states) ua.push_back(s + 1);
  ordered_json perm = ordered_json::array();
  for (int s : report.permutation) perm.push_back(s + 1);
  return {{"classes", std::move(classes)},
          {"ua_states", std::move(ua)},
          {"irreducible", report.irreducible},
          {"permutation", std::move(perm)}};
}

void emit(const ordered_json& report, const Options& opt,
          const std::string& summary) {
  std::cout << report.dump(2) << "\n";
  if (!opt.json_only) std::cerr << summary;
}

int run_check(const std::string& path, const Options& opt) {
  smp::SmpModel model = smp::model_io::read_file(path);
  auto diags = smp::validate(model);
  ordered_json jd = ordered_json::array();
  std::string summary;
  for (const auto& d : diags) {
    jd.push_back(d.message);
    summary += "diagnostic: " + d.message + "\n";
  }
  ordered_json report{{"command", "check"},
                      {"model_path", path},
                      {"model", model_digest(model)},
                      {"diagnostics", std::move(jd)},
                      {"valid", diags.empty()}};
  summary += diags.empty() ? "model is valid\n"
                           : std::to_string(diags.size()) +
                                 " validation problem(s) found\n";
  emit(report, opt, summary);
  return diags.empty() ? 0 : 1;
}

int run_analyze(const std::string& path, const Options& opt) {
  smp::SmpModel model = smp::model_io::read_file(path);
  auto diags = smp::validate(model);
  if (!diags.empty()) {
    std::cerr << "invalid model: " << diags.front().message << "\n";
    return 1;
  }
  auto report = smp::graph::structure(model.p);
  ordered_json j{{"command", "analyze"},
                 {"model_path", path},
                 {"model", model_digest(model)},
                 {"structure", structure_json(report)}};
  std::string summary;
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    summary += "class " + std::to_string(c + 1) + " {";
    for (std::size_t t = 0; t < report.classes[c].size(); ++t)
      summary += (t ? "," : "") + std::to_string(report.classes[c][t] + 1);
    summary += std::string("}: ") +
               (report.kinds[c] == smp::graph::BlockKind::recurrent
                    ? "recurrent"
                    : "transient") +
               ", spectral radius " + fmt6(report.radii[c]) + "\n";
  }
  summary += "UA states:";
  for (int s : report.ua_states) summary += " " + std::to_string(s + 1);
  summary += report.ua_states.empty() ? " (none)\n" : "\n";
  summary += std::string("irreducible: ") +
             (report.irreducible ? "yes" : "no") + "\n";
  emit(j, opt, summary);
  return 0;
}

int run_moments(const std::string& path, int target1, int order,
                const Options& opt) {
  smp::SmpModel model = smp::model_io::read_file(path);
  auto diags = smp::validate(model);
  if (!diags.empty()) {
    std::cerr << "invalid model: " << diags.front().message << "\n";
    return 1;
  }
  const int target = target1 - 1;
  smp::passage::PassageSolver solver(model, target);
  auto pm = solver.moments(order);
  double residual = smp::passage::verify_first_step(model, pm);

  ordered_json orders = ordered_json::array();
  for (const auto& mu : pm.orders) orders.push_back(vector_json(mu));
  ordered_json notes = ordered_json::array();
  if (solver.target_is_absorbing())
    notes.push_back("target state is absorbing; the diagonal entry is the "
                    "formula's first-return value");
  ordered_json j{{"command", "moments"},
                 {"model_path", path},
                 {"model", model_digest(model)},
                 {"structure", structure_json(smp::graph::structure(model.p))},
                 {"results",
                  {{"target", target1},
                   {"orders", std::move(orders)},
                   {"first_step_residual", residual}}},
                 {"notes", std::move(notes)}};
  std::string summary;
  for (int r = 1; r <= pm.max_order(); ++r) {
    summary += "mu_" + std::to_string(target1) + "^(" + std::to_string(r) +
               ") = [";
    const auto& mu = pm.order(r);
    for (std::size_t i = 0; i < mu.size(); ++i)
      summary += (i ? ", " : "") + fmt6(mu[i]);
    summary += "]\n";
  }
  summary += "first-step residual: " + fmt6(residual) + "\n";
  emit(j, opt, summary);
  return 0;
}

int run_simulate(const std::string& path, int target1, long reps,
                 std::uint64_t seed, bool seed_given, int order,
                 const std::string& trace_path, const Options& opt) {
  smp::SmpModel model = smp::model_io::read_file(path);
  auto diags = smp::validate(model);
  if (!diags.empty()) {
    std::cerr << "invalid model: " << diags.front().message << "\n";
    return 1;
  }
  if (!model.has_distributions())
    throw smp::UnsupportedOperationError(
        "simulate requires a distribution-flavored model (this one carries "
        "moment matrices only)");
  if (!seed_given) seed = std::random_device{}();

  const int target = target1 - 1;
  smp::sim::SimConfig cfg;
  cfg.seed = seed;
  cfg.replications = reps;
  auto emp = smp::sim::empirical_passage(model, target, cfg, order);

  // Analytic comparison: moments are derivable from the families.
  auto pm = smp::passage::higher_moments(model, target, order);

  ordered_json per_order = ordered_json::array();
  for (int r = 1; r <= order; ++r) {
    auto ri = static_cast<std::size_t>(r - 1);
    per_order.push_back({{"order", r},
                         {"empirical_mean", vector_json(emp.moment[ri])},
                         {"standard_error", vector_json(emp.se[ri])},
                         {"analytic", vector_json(pm.order(r))}});
  }
  ordered_json censored = ordered_json::array();
  for (long c : emp.censored) censored.push_back(c);

  if (!trace_path.empty()) {
    smp::sim::SimConfig trace_cfg = cfg;
    auto trace = smp::sim::simulate_trace(model, trace_cfg);
    smp::trace_io::write_csv_file(trace_path, trace);
  }

  ordered_json j{{"command", "simulate"},
                 {"model_path", path},
                 {"model", model_digest(model)},
                 {"seed", seed},
                 {"results",
                  {{"target", target1},
                   {"replications_per_source", emp.replications_per_source},
                   {"orders", std::move(per_order)},
                   {"censored", std::move(censored)}}}};
  if (!trace_path.empty()) j["trace_path"] = trace_path;

  std::string summary = "seed " + std::to_string(seed) + ", " +
                        std::to_string(reps) + " replications per source\n";
  for (int r = 1; r <= order; ++r) {
    auto ri = static_cast<std::size_t>(r - 1);
    summary += "order " + std::to_string(r) + ":\n";
    for (std::size_t i = 0; i < model.size(); ++i)
      summary += "  from " + std::to_string(i + 1) + ": empirical " +
                 fmt6(emp.moment[ri][i]) + " (se " + fmt6(emp.se[ri][i]) +
                 "), analytic " + fmt6(pm.order(r)[i]) + "\n";
  }
  emit(j, opt, summary);
  return 0;
}

int run_estimate(const std::string& trace_path, int m, int target1, int order,
                 const Options& opt) {
  auto trace = smp::trace_io::read_csv_file(trace_path);
  auto est = smp::estimate::estimate(trace, m, order);
  auto pm = smp::estimate::estimate_passage(est, target1 - 1, order);

  ordered_json p_hat = ordered_json::array();
  for (std::size_t i = 0; i < est.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < est.size(); ++k) row.push_back(est.p_hat(i, k));
    p_hat.push_back(std::move(row));
  }
  ordered_json e_hat = ordered_json::array();
  for (const auto& er : est.e_hat.orders) {
    ordered_json mat = ordered_json::array();
    for (std::size_t i = 0; i < er.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < er.cols(); ++k) row.push_back(er(i, k));
      mat.push_back(std::move(row));
    }
    e_hat.push_back(std::move(mat));
  }
  ordered_json orders = ordered_json::array();
  for (const auto& mu : pm.orders) orders.push_back(vector_json(mu));
  ordered_json jdiags = ordered_json::array();
  for (const auto& d : est.diagnostics) jdiags.push_back(d);

  ordered_json coverage = ordered_json::array();
  long observed_cells = 0;
  for (std::size_t i = 0; i < est.size(); ++i)
    for (std::size_t k = 0; k < est.size(); ++k)
      if (est.counts[i][k] > 0) ++observed_cells;
  coverage = {{"observed_cells", observed_cells},
              {"total_cells", est.size() * est.size()}};

  ordered_json j{{"command", "estimate"},
                 {"trace_path", trace_path},
                 {"model", {{"m", m}, {"flavor", "estimated"}}},
                 {"results",
                  {{"target", target1},
                   {"p_hat", std::move(p_hat)},
                   {"e_hat", std::move(e_hat)},
                   {"orders", std::move(orders)},
                   {"coverage", std::move(coverage)}}},
                 {"diagnostics", std::move(jdiags)}};

  std::string summary;
  for (int r = 1; r <= pm.max_order(); ++r) {
    summary += "mu_hat_" + std::to_string(target1) + "^(" +
               std::to_string(r) + ") = [";
    const auto& mu = pm.order(r);
    for (std::size_t i = 0; i < mu.size(); ++i)
      summary += (i ? ", " : "") + fmt6(mu[i]);
    summary += "]\n";
  }
  emit(j, opt, summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-passage moments of finite-state semi-Markov processes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json-only", opt.json_only,
               "suppress the human summary on stderr");

  std::string model_path, trace_path, emit_trace;
  int target = 1, order = 1, states = 0;
  long reps = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "validate a model file");
  check->add_option("model", model_path)->required();

  auto* analyze = app.add_subcommand("analyze", "classify model structure");
  analyze->add_option("model", model_path)->required();

  auto* moments =
      app.add_subcommand("moments", "analytic first-passage moments");
  moments->add_option("model", model_path)->required();
  moments->add_option("--target", target, "target state (1-based)")
      ->required();
  moments->add_option("--order", order, "max moment order R")
      ->default_val(1)
      ->check(CLI::Range(1, smp::passage::kMaxOrder));

  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo first-passage moments");
  simulate->add_option("model", model_path)->required();
  simulate->add_option("--target", target)->required();
  simulate->add_option("--reps", reps, "replications per source state")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* seed_opt = simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--order", order)
      ->default_val(1)
      ->check(CLI::Range(1, smp::passage::kMaxOrder));
  simulate->add_option("--emit-trace", emit_trace,
                       "also write a transition trace CSV here");

  auto* estimate =
      app.add_subcommand("estimate", "estimate moments from a trace CSV");
  estimate->add_option("trace", trace_path)->required();
  estimate->add_option("--states", states, "number of states m")
      ->required()
      ->check(CLI::Range(2, 1 << 20));
  estimate->add_option("--target", target)->required();
  estimate->add_option("--order", order)
      ->default_val(1)
      ->check(CLI::Range(1, smp::passage::kMaxOrder));

  CLI11_PARSE(app, argc, argv);

  try {
    auto started = std::chrono::steady_clock::now();
    int rc = 1;
    if (check->parsed()) rc = run_check(model_path, opt);
    else if (analyze->parsed()) rc = run_analyze(model_path, opt);
    else if (moments->parsed()) rc = run_moments(model_path, target, order, opt);
    else if (simulate->parsed())
      rc = run_simulate(model_path, target, reps, seed, !seed_opt->empty(),
                        order, emit_trace, opt);
    else if (estimate->parsed())
      rc = run_estimate(trace_path, states, target, order, opt);
    if (!opt.json_only) {
      auto ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      std::cerr << "elapsed: " << fmt6(ms) << " ms\n";
    }
    return rc;
  } catch (const smp::UaViolationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const smp::InternalInconsistencyError& err) {
    std::cerr << "internal inconsistency: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
