#pragma once

#include <optional>
#include <string>

#include "dagsim/errors.hpp"

namespace dagsim {

/// Network load regimes. The steady regimes run at a single arrival rate;
/// the unsteady ones switch rate abruptly when the observed transaction
/// becomes visible.
enum class LoadRegime {
  high,         // steady high arrival rate (HR)
  low,          // steady low arrival rate (LR)
  high_to_low,  // abrupt high -> low switch (H2LR), worst case
  low_to_high,  // abrupt low -> high switch (L2HR), best case
};

std::string to_string(LoadRegime regime);

/// Parses "hr", "lr", "h2lr" or "l2hr" (case-insensitive).
std::optional<LoadRegime> parse_regime(const std::string& text);

/// Arrival rates and the reveal delay, plus the derived equilibrium tip
/// counts. Immutable once validated; share freely across threads.
struct NetworkParams {
  double lambda_high = 0.0;   // high-load arrivals per second
  double lambda_low = 0.0;    // low-load arrivals per second
  double reveal_delay = 0.0;  // seconds between issuing and visibility

  // Derived by validate(): equilibrium tip counts 2*lambda*reveal_delay.
  // tip_count_low is clamped to 1 whenever 2*lambda_low*reveal_delay <= 2.
  double tip_count_high = 0.0;
  double tip_count_low = 0.0;

  double high_interarrival() const { return 1.0 / lambda_high; }
  double low_interarrival() const { return 1.0 / lambda_low; }

  /// Tip count rounded half-up for chain state spaces, where tips are counts.
  int tip_count_high_int() const;
};

/// Confirmation threshold on cumulative weight; must be at least 2.
struct ConfirmationThreshold {
  int value = 2;
};

/// Throws ValidationError(InvalidThreshold) unless m >= 2.
ConfirmationThreshold make_threshold(int m);

/// Checks positivity, fills the derived tip counts, and enforces the load
/// conditions: the high rate must satisfy 1/lambda_high <= reveal_delay and
/// the low rate 1/lambda_low >= reveal_delay (the boundary rate belongs to
/// both sides). Pass a regime to narrow the check to the rates that regime
/// actually uses.
NetworkParams validate(NetworkParams raw,
                       std::optional<LoadRegime> regime = std::nullopt);

}  // namespace dagsim
