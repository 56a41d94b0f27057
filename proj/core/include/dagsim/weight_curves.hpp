#pragma once

#include "dagsim/params.hpp"

namespace dagsim::analytic {

/// Growth-rate constant of the exponential adaptation phase in the high-load
/// regime. The adaptation endpoint follows from it: the expected weight
/// 2*exp(c*t/h) reaches slope lambda at t0 = (h/c)*ln(L/(4c)), where the
/// weight equals L/(2c).
inline constexpr double kAdaptationRate = 0.352;

/// Equilibrium tip count 2*lambda*reveal_delay, the stationary solution of
/// the tip replacement balance.
double tip_equilibrium(double lambda, double reveal_delay);

struct AdaptationPeriod {
  double duration = 0.0;       // t0, seconds after the reveal
  double weight_at_end = 0.0;  // expected cumulative weight at t0
};

/// Duration and end weight of the high-load adaptation phase. Throws
/// ValidationError(AdaptationUndefined) when tip_count_high <= 4*c (= 1.408),
/// where the duration would be non-positive.
AdaptationPeriod adaptation_period(double tip_count_high, double reveal_delay);

/// Expected cumulative weight at t seconds after the reveal, steady high
/// load: exponential up to t0, then linear with slope lambda_high.
double expected_weight_hr(double t, const NetworkParams& params);

/// Expected cumulative weight under steady low load: 1 + lambda_low * t.
double expected_weight_lr(double t, double lambda_low);

/// Expected cumulative weight after a low-to-high switch at the reveal:
/// every arrival approves the observed transaction, so 1 + round(lambda*t).
double expected_weight_l2hr(double t, double lambda_high);

}  // namespace dagsim::analytic
