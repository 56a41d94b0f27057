#pragma once

#include "dagsim/params.hpp"

namespace dagsim::analytic {

/// When the unsteady regimes flip the arrival rate. The default switches at
/// the observed transaction's reveal (worst case for high-to-low, best case
/// for low-to-high); switching at confirmation instead makes each unsteady
/// regime behave like the steady regime it started in.
enum class SwitchTiming { at_reveal, at_confirmation };

/// Expected confirmation delay in seconds from the reveal to cumulative
/// weight m, per regime. Throws ValidationError(InvalidThreshold) for m < 2.
double confirmation_delay(int m, LoadRegime regime,
                          const NetworkParams& params,
                          SwitchTiming timing = SwitchTiming::at_reveal);

/// Steady high load: logarithmic while confirmation lands inside the
/// adaptation phase, linear afterwards.
double confirmation_delay_hr(int m, double lambda_high, double reveal_delay);

/// Steady low load: (m - 1) mean interarrival times.
double confirmation_delay_lr(int m, double lambda_low);

/// High-to-low switch at the reveal: expected first-passage step of the
/// transient chain to weight m, scaled by the low-rate mean interarrival.
double confirmation_delay_h2lr(int m, const NetworkParams& params);

/// Low-to-high switch at the reveal: (m - 1) high-rate interarrival times.
double confirmation_delay_l2hr(int m, double lambda_high);

}  // namespace dagsim::analytic
