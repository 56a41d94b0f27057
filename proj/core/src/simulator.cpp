#include "dagsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dagsim/confirmation_delay.hpp"
#include "dagsim/parallel.hpp"

namespace dagsim::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Piecewise-constant Poisson arrivals with one rate switch. Sampling past
// the switch restarts the exponential clock there, which is exact thanks to
// memorylessness.
struct RatePlan {
  double pre = 0.0;
  double post = 0.0;
  double switch_time = kInf;

  double next(double from, SeededStream& rng) const {
    const double rate = from < switch_time ? pre : post;
    double t = from + rng.exponential(rate);
    if (from < switch_time && t > switch_time) {
      t = switch_time + rng.exponential(post);
    }
    return t;
  }
};

RatePlan make_plan(const NetworkParams& params, LoadRegime regime,
                   double switch_time) {
  RatePlan plan;
  const bool pre_high =
      regime == LoadRegime::high || regime == LoadRegime::high_to_low;
  const bool post_high =
      regime == LoadRegime::high || regime == LoadRegime::low_to_high;
  plan.pre = pre_high ? params.lambda_high : params.lambda_low;
  plan.post = post_high ? params.lambda_high : params.lambda_low;
  plan.switch_time = switch_time;
  return plan;
}

WeightTrace run_weight_experiment_impl(const NetworkParams& params,
                                       LoadRegime regime, int m,
                                       double horizon, SeededStream& rng,
                                       double warmup,
                                       bool stop_when_confirmed) {
  if (!(horizon > 0.0)) {
    throw ValidationError(ErrorCode::NonPositiveDelay,
                          "horizon must be positive");
  }
  if (warmup < 0.0) warmup = 50.0 * params.reveal_delay;

  const double inject_time = warmup;
  const double reveal_abs = warmup + params.reveal_delay;
  const double end_time = reveal_abs + horizon;
  const RatePlan plan = make_plan(params, regime, reveal_abs);

  LedgerState ledger(params.reveal_delay);
  double next_arrival = plan.next(0.0, rng);
  bool injected = false;
  bool tracking = false;

  WeightTrace trace;
  trace.reveal_time = reveal_abs;
  int weight = 1;

  while (true) {
    const double reveal_t = ledger.next_reveal_time();
    const double inject_t = injected ? kInf : inject_time;
    const double t = std::min({reveal_t, inject_t, next_arrival});
    if (t > end_time) break;

    if (reveal_t <= t) {
      const std::uint32_t id = ledger.reveal_next();
      if (id == ledger.observed_id()) {
        tracking = true;
        trace.samples.emplace_back(0.0, weight);
      }
    } else if (inject_t <= t) {
      ledger.issue(inject_time, Issuer::observed, rng);
      injected = true;
    } else {
      const std::uint32_t id = ledger.issue(t, Issuer::honest, rng);
      next_arrival = plan.next(t, rng);
      if (tracking) {
        if (ledger.transaction(id).approves_observed) ++weight;
        trace.samples.emplace_back(t - reveal_abs, weight);
        if (!trace.confirmation_time && weight >= m) {
          trace.confirmation_time = t - reveal_abs;
          if (stop_when_confirmed) break;
        }
      }
    }
  }

  trace.censored = !trace.confirmation_time.has_value();
  return trace;
}

}  // namespace

int weight_at(const WeightTrace& trace, double t) {
  int w = 1;
  for (const auto& [ts, ws] : trace.samples) {
    if (ts > t) break;
    w = ws;
  }
  return w;
}

WeightTrace run_weight_experiment(const NetworkParams& params,
                                  LoadRegime regime, ConfirmationThreshold m,
                                  double horizon, SeededStream& stream,
                                  double warmup) {
  return run_weight_experiment_impl(params, regime, m.value, horizon, stream,
                                    warmup, /*stop_when_confirmed=*/false);
}

std::vector<TipPoint> tip_count_series(const NetworkParams& params,
                                       LoadRegime regime, double horizon,
                                       SeededStream& stream,
                                       double switch_time) {
  if (!(horizon > 0.0)) {
    throw ValidationError(ErrorCode::NonPositiveDelay,
                          "horizon must be positive");
  }
  if (switch_time < 0.0) switch_time = 50.0 * params.reveal_delay;
  const RatePlan plan = make_plan(params, regime, switch_time);

  LedgerState ledger(params.reveal_delay);
  std::vector<TipPoint> series;
  double next_arrival = plan.next(0.0, stream);

  while (true) {
    const double reveal_t = ledger.next_reveal_time();
    const double t = std::min(reveal_t, next_arrival);
    if (t > horizon) break;
    if (reveal_t <= t) {
      ledger.reveal_next();
    } else {
      ledger.issue(t, Issuer::honest, stream);
      next_arrival = plan.next(t, stream);
    }
    series.push_back(
        {t, static_cast<int>(ledger.visible_tip_count())});
  }
  return series;
}

double time_average_tips(const std::vector<TipPoint>& series, double from,
                         double to) {
  double acc = 0.0;
  double prev_t = 0.0;
  double prev_tips = 1.0;  // genesis is the only tip before the first event
  for (const TipPoint& p : series) {
    const double lo = std::max(prev_t, from);
    const double hi = std::min(p.t, to);
    if (hi > lo) acc += prev_tips * (hi - lo);
    prev_t = p.t;
    prev_tips = p.tips;
  }
  if (to > std::max(prev_t, from)) {
    acc += prev_tips * (to - std::max(prev_t, from));
  }
  return acc / (to - from);
}

DelayEstimate estimate_confirmation_delay(const NetworkParams& params,
                                          LoadRegime regime,
                                          ConfirmationThreshold m,
                                          long replications,
                                          const SeededStream& stream,
                                          double horizon) {
  if (replications < 1) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "need at least one replication");
  }
  if (!(horizon > 0.0)) {
    horizon = 4.0 * analytic::confirmation_delay(m.value, regime, params) +
              20.0 * params.reveal_delay;
  }

  std::vector<double> delays(static_cast<std::size_t>(replications),
                             std::numeric_limits<double>::quiet_NaN());
  parallel_for_index(delays.size(), [&](std::size_t rep) {
    SeededStream rng =
        derive_stream(stream.master_seed(),
                      stream.stream_index() + static_cast<std::uint64_t>(rep));
    const WeightTrace trace = run_weight_experiment_impl(
        params, regime, m.value, horizon, rng, -1.0,
        /*stop_when_confirmed=*/true);
    if (trace.confirmation_time) delays[rep] = *trace.confirmation_time;
  });

  DelayEstimate est;
  double sum = 0.0;
  double max_delay = 0.0;
  for (double d : delays) {
    if (std::isnan(d)) {
      ++est.censored;
    } else {
      ++est.confirmed;
      sum += d;
      max_delay = std::max(max_delay, d);
    }
  }
  if (est.confirmed > 0) {
    est.mean = sum / static_cast<double>(est.confirmed);
    double ss = 0.0;
    for (double d : delays) {
      if (!std::isnan(d)) ss += (d - est.mean) * (d - est.mean);
    }
    if (est.confirmed > 1) {
      est.standard_error = std::sqrt(
          ss / (static_cast<double>(est.confirmed) - 1.0) /
          static_cast<double>(est.confirmed));
    }
    est.histogram.assign(40, 0);
    est.bin_width = max_delay > 0.0 ? max_delay / 40.0 : 1.0;
    for (double d : delays) {
      if (std::isnan(d)) continue;
      auto bin = static_cast<std::size_t>(d / est.bin_width);
      if (bin >= est.histogram.size()) bin = est.histogram.size() - 1;
      ++est.histogram[bin];
    }
  }
  return est;
}

}  // namespace dagsim::sim
