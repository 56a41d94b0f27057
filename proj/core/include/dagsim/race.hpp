#pragma once

#include <cstdint>

#include "dagsim/attack.hpp"
#include "dagsim/rng.hpp"

namespace dagsim::attack {

/// One double-spend race: honest rate, attacker rate, the honest head start
/// alpha (transactions issued before the payment confirms) and the
/// attachment gap beta.
struct AttackScenario {
  double lambda = 0.0;
  double mu = 0.0;
  int alpha = 0;
  int beta = 0;

  RaceOdds odds() const { return race_probabilities(lambda, mu); }
};

struct RaceEstimate {
  double probability = 0.0;
  double standard_error = 0.0;
  long replications = 0;
  long censored = 0;
  /// Upper bound on how far censoring can underestimate the probability:
  /// censored fraction times the catch-up chance from the cutoff.
  double censoring_bias_bound = 0.0;
};

/// Simulates the two-phase race: Bernoulli rounds until the honest side has
/// issued alpha transactions, then success if the attacker is already ahead
/// of alpha + beta, otherwise a +-1 catch-up walk on the remaining deficit
/// until it clears (success) or hits deficit_cutoff (censored, counted as
/// failure). Replication r draws from stream index stream.stream_index() + r,
/// so results do not depend on scheduling.
RaceEstimate monte_carlo_race(const AttackScenario& scenario,
                              long replications, int deficit_cutoff,
                              const SeededStream& stream);

/// Full-system Monte-Carlo for the high-to-low attack: each replication
/// walks the transient chain to the two-tip step to sample the payment's
/// weight there, then races with the induced honest head start.
RaceEstimate monte_carlo_race_h2lr(int m, const NetworkParams& params,
                                   double mu, long replications,
                                   int deficit_cutoff,
                                   const SeededStream& stream);

}  // namespace dagsim::attack
