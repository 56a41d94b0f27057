#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dagsim/ledger.hpp"
#include "dagsim/params.hpp"
#include "dagsim/rng.hpp"

namespace dagsim::sim {

/// Cumulative-weight history of the observed transaction. samples[0] is
/// (0, 1) at the reveal; samples[k] holds the weight right after the k-th
/// arrival issued since the reveal, with time measured from the reveal.
struct WeightTrace {
  double reveal_time = 0.0;  // absolute simulation time of the reveal
  std::vector<std::pair<double, int>> samples;
  std::optional<double> confirmation_time;  // seconds since reveal
  bool censored = false;  // horizon elapsed before the threshold was reached
};

/// Weight of the trace at t seconds after the reveal (step function).
int weight_at(const WeightTrace& trace, double t);

/// Issues one observed transaction after the warm-up and tracks its
/// cumulative weight for `horizon` seconds past its reveal. The unsteady
/// regimes switch the arrival rate exactly at the reveal. A negative warmup
/// selects the default of 50 reveal delays.
WeightTrace run_weight_experiment(const NetworkParams& params,
                                  LoadRegime regime, ConfirmationThreshold m,
                                  double horizon, SeededStream& stream,
                                  double warmup = -1.0);

struct TipPoint {
  double t = 0.0;
  int tips = 0;
};

/// Visible tip count sampled after every event from t = 0. The unsteady
/// regimes switch rate at `switch_time` (negative = 50 reveal delays).
std::vector<TipPoint> tip_count_series(const NetworkParams& params,
                                       LoadRegime regime, double horizon,
                                       SeededStream& stream,
                                       double switch_time = -1.0);

/// Time-weighted mean of a tip series over [from, to].
double time_average_tips(const std::vector<TipPoint>& series, double from,
                         double to);

struct DelayEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  long confirmed = 0;
  long censored = 0;  // replications that ran out of horizon
  std::vector<long> histogram;
  double bin_width = 0.0;
};

/// Mean confirmation delay over independent replications; replication r
/// draws from stream index stream.stream_index() + r. A non-positive horizon
/// picks several multiples of the analytic delay, keeping censoring rare.
DelayEstimate estimate_confirmation_delay(const NetworkParams& params,
                                          LoadRegime regime,
                                          ConfirmationThreshold m,
                                          long replications,
                                          const SeededStream& stream,
                                          double horizon = -1.0);

}  // namespace dagsim::sim
