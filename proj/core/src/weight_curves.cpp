#include "dagsim/weight_curves.hpp"

#include <cmath>

namespace dagsim::analytic {

double tip_equilibrium(double lambda, double reveal_delay) {
  return 2.0 * lambda * reveal_delay;
}

AdaptationPeriod adaptation_period(double tip_count_high,
                                   double reveal_delay) {
  const double floor = 4.0 * kAdaptationRate;  // weight curve start, 2*exp(0)
  if (!(tip_count_high > floor)) {
    throw ValidationError(
        ErrorCode::AdaptationUndefined,
        "adaptation period undefined for tip count <= " + std::to_string(floor));
  }
  AdaptationPeriod out;
  out.duration =
      reveal_delay / kAdaptationRate * std::log(tip_count_high / floor);
  out.weight_at_end = tip_count_high / (2.0 * kAdaptationRate);
  return out;
}

double expected_weight_hr(double t, const NetworkParams& params) {
  const AdaptationPeriod adapt =
      adaptation_period(params.tip_count_high, params.reveal_delay);
  if (t <= adapt.duration) {
    return 2.0 * std::exp(kAdaptationRate * t / params.reveal_delay);
  }
  return adapt.weight_at_end + params.lambda_high * (t - adapt.duration);
}

double expected_weight_lr(double t, double lambda_low) {
  return 1.0 + lambda_low * t;
}

double expected_weight_l2hr(double t, double lambda_high) {
  return 1.0 + static_cast<double>(std::llround(lambda_high * t));
}

}  // namespace dagsim::analytic
