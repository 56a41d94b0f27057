#include "dagsim/confirmation_delay.hpp"

#include <cmath>
#include <vector>

#include "dagsim/weight_curves.hpp"

namespace dagsim::analytic {

namespace {

void require_threshold(int m) {
  if (m < 2) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "confirmation threshold must be >= 2, got " +
                              std::to_string(m));
  }
}

}  // namespace

double confirmation_delay_hr(int m, double lambda_high, double reveal_delay) {
  require_threshold(m);
  const AdaptationPeriod adapt =
      adaptation_period(2.0 * lambda_high * reveal_delay, reveal_delay);
  const long end_weight = std::llround(adapt.weight_at_end);
  if (m <= end_weight) {
    return reveal_delay / kAdaptationRate * std::log(m / 2.0);
  }
  return adapt.duration + (m - adapt.weight_at_end) / lambda_high;
}

double confirmation_delay_lr(int m, double lambda_low) {
  require_threshold(m);
  return (m - 1) / lambda_low;
}

double confirmation_delay_l2hr(int m, double lambda_high) {
  require_threshold(m);
  return (m - 1) / lambda_high;
}

double confirmation_delay_h2lr(int m, const NetworkParams& params) {
  require_threshold(m);
  const int start_tips = params.tip_count_high_int();
  if (start_tips < 2) {
    throw ValidationError(ErrorCode::RegimeConditionViolated,
                          "high-to-low chain needs an initial tip count >= 2");
  }

  // First-passage pass of the transient chain with weight m absorbing, so
  // every path is counted exactly once at its first hit.
  std::vector<double> mass{1.0};  // mass over unconfirmed weights
  int min_w = 1;
  double expected_steps = 0.0;
  double absorbed = 0.0;
  const int step_limit = m + start_tips;  // first hit occurs well inside
  for (int s = 0; s < step_limit && !mass.empty(); ++s) {
    const int j = std::max(start_tips - s, 1);
    const double k = static_cast<double>(s + 1);
    double newly = 0.0;
    if (j >= 2) {
      const double up = 2.0 / j;
      std::vector<double> next(mass.size() + 1, 0.0);
      for (std::size_t i = 0; i < mass.size(); ++i) {
        const int w = min_w + static_cast<int>(i);
        next[i] += mass[i] * (1.0 - up);
        if (w + 1 == m) {
          newly += mass[i] * up;
        } else {
          next[i + 1] += mass[i] * up;
        }
      }
      if (!next.empty() && next.back() == 0.0) next.pop_back();
      mass = std::move(next);
      if (!mass.empty() && mass.front() == 0.0) {
        mass.erase(mass.begin());
        ++min_w;
      }
    } else {
      const int top = min_w + static_cast<int>(mass.size()) - 1;
      if (top + 1 == m) {
        newly = mass.back();
        mass.pop_back();
      }
      ++min_w;
    }
    expected_steps += k * newly;
    absorbed += newly;
  }
  return expected_steps * params.low_interarrival();
}

double confirmation_delay(int m, LoadRegime regime,
                          const NetworkParams& params, SwitchTiming timing) {
  switch (regime) {
    case LoadRegime::high:
      return confirmation_delay_hr(m, params.lambda_high, params.reveal_delay);
    case LoadRegime::low:
      return confirmation_delay_lr(m, params.lambda_low);
    case LoadRegime::high_to_low:
      if (timing == SwitchTiming::at_confirmation) {
        return confirmation_delay_hr(m, params.lambda_high,
                                     params.reveal_delay);
      }
      return confirmation_delay_h2lr(m, params);
    case LoadRegime::low_to_high:
      if (timing == SwitchTiming::at_confirmation) {
        return confirmation_delay_lr(m, params.lambda_low);
      }
      return confirmation_delay_l2hr(m, params.lambda_high);
  }
  throw ValidationError(ErrorCode::RegimeConditionViolated, "unknown regime");
}

}  // namespace dagsim::analytic
