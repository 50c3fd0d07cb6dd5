#include "smp/estimate.hpp"

#include <cmath>

#include "smp/errors.hpp"
#include "smp/graph.hpp"

namespace smp::estimate {

SmpModel EstimatedModel::as_model() const {
  SmpModel model{{}, p_hat, e_hat};
  model.state_names.reserve(size());
  for (std::size_t i = 0; i < size(); ++i)
    model.state_names.push_back(std::to_string(i + 1));
  return model;
}

EstimatedModel estimate(const TransitionTrace& trace, int m, int R) {
  if (trace.records.empty()) throw FormatError("trace is empty");
  if (m < 2) throw DomainError("state count m must be > 1");
  if (R < 1) throw DomainError("moment order R must be >= 1");
  const auto mm = static_cast<std::size_t>(m);

  std::vector<std::vector<long>> counts(mm, std::vector<long>(mm, 0));
  // power_sums[r-1](i,j) accumulates sum over K of x_ijK^r
  std::vector<Matrix> power_sums(static_cast<std::size_t>(R), Matrix(mm, mm));

  std::size_t row = 0;
  for (const auto& rec : trace.records) {
    ++row;
    if (rec.from < 0 || rec.from >= m || rec.to < 0 || rec.to >= m)
      throw FormatError("trace record " + std::to_string(row) +
                            ": state out of range 1.." + std::to_string(m),
                        row);
    if (!(rec.sojourn >= 0.0) || !std::isfinite(rec.sojourn))
      throw FormatError("trace record " + std::to_string(row) +
                            ": sojourn must be finite and >= 0",
                        row);
    auto i = static_cast<std::size_t>(rec.from);
    auto j = static_cast<std::size_t>(rec.to);
    ++counts[i][j];
    double xp = 1.0;
    for (int r = 1; r <= R; ++r) {
      xp *= rec.sojourn;
      power_sums[static_cast<std::size_t>(r - 1)](i, j) += xp;
    }
  }

  EstimatedModel est{Matrix(mm, mm), {}, std::move(counts), {}, {}};
  for (std::size_t i = 0; i < mm; ++i) {
    long total = 0;
    for (long n : est.counts[i]) total += n;
    if (total == 0) {
      est.unvisited_rows.push_back(static_cast<int>(i));
      est.diagnostics.push_back("row " + std::to_string(i + 1) +
                                " unobserved: no transitions out of state " +
                                std::to_string(i + 1));
      continue;
    }
    for (std::size_t j = 0; j < mm; ++j)
      est.p_hat(i, j) =
          static_cast<double>(est.counts[i][j]) / static_cast<double>(total);
  }
  for (int r = 1; r <= R; ++r) {
    Matrix er(mm, mm, 0.0);
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = 0; j < mm; ++j)
        if (est.counts[i][j] > 0)
          er(i, j) = power_sums[static_cast<std::size_t>(r - 1)](i, j) /
                     static_cast<double>(est.counts[i][j]);
    est.e_hat.orders.push_back(std::move(er));
  }
  return est;
}

passage::PassageMoments estimate_passage(const EstimatedModel& est, int j,
                                         int R) {
  const auto m = est.size();
  if (j < 0 || static_cast<std::size_t>(j) >= m)
    throw DomainError("target state out of range");

  auto g = graph::digraph_of(est.p_hat);
  if (!est.unvisited_rows.empty()) {
    // An unvisited row the observed dynamics can enter means the trace ended
    // before the data was complete.
    std::vector<int> reachable_unvisited;
    for (int u : est.unvisited_rows)
      for (std::size_t v = 0; v < m; ++v)
        if (g.has_edge(static_cast<int>(v), u)) {
          reachable_unvisited.push_back(u);
          break;
        }
    if (!reachable_unvisited.empty()) {
      std::string msg = "incomplete data: reachable state(s) without observed "
                        "outgoing transitions:";
      for (int u : reachable_unvisited) msg += " " + std::to_string(u + 1);
      throw IncompleteDataError(std::move(reachable_unvisited), msg);
    }
  }

  auto unreachable = graph::unreachable_sources(g, j);
  if (!unreachable.empty()) {
    std::string msg = "state " + std::to_string(j + 1) +
                      " is not universally accessible in the digraph of the "
                      "estimated p; collect more data. No path from state(s)";
    for (int s : unreachable) msg += " " + std::to_string(s + 1);
    throw UaViolationError(j, std::move(unreachable), msg);
  }

  return passage::higher_moments(est.as_model(), j, R);
}

}  // namespace smp::estimate
