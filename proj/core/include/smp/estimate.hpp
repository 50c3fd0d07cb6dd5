#pragma once

#include <string>
#include <vector>

#include "smp/model.hpp"
#include "smp/passage.hpp"

namespace smp::estimate {

struct TraceRecord {
  long rep = 0;
  int from = 0;  // 0-based states
  int to = 0;
  double sojourn = 0.0;
};

struct TransitionTrace {
  std::vector<TraceRecord> records;
};

// Empirical p-hat and e-hat from completed sojourn observations.
struct EstimatedModel {
  Matrix p_hat;
  MomentMatrixSet e_hat;
  std::vector<std::vector<long>> counts;  // n_ij
  std::vector<int> unvisited_rows;        // 0-based states never left
  std::vector<std::string> diagnostics;

  bool observed(int i, int j) const {
    return counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0;
  }
  std::size_t size() const { return p_hat.rows(); }

  // Moment-flavored model over the estimated quantities.
  SmpModel as_model() const;
};

// Counting estimators: p_hat_ij = n_ij / sum_k n_ik and
// e_hat^(r)_ij = mean of observed sojourn^r.  Unobserved cells get zero and
// are flagged; rows never visited get an all-zero p_hat row plus a
// diagnostic.
EstimatedModel estimate(const TransitionTrace& trace, int m, int R);

// Plug-in passage moments on (p_hat, e_hat).  Throws IncompleteDataError for
// unvisited rows that other observed states can reach, UaViolationError when
// j is not UA in the digraph of p_hat.
passage::PassageMoments estimate_passage(const EstimatedModel& est, int j,
                                         int R);

}  // namespace smp::estimate
