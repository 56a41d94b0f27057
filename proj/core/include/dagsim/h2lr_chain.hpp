#pragma once

#include <vector>

#include "dagsim/params.hpp"
#include "dagsim/rng.hpp"

namespace dagsim::analytic {

/// Probability mass over the observed transaction's cumulative weight after k
/// post-switch arrivals in the high-to-low regime. The tip count is carried
/// implicitly: it equals tip_count_high - k down the selection lattice and
/// stays 1 once the lattice is exhausted, from which point the weight rises
/// by one per arrival.
class StateDistribution {
 public:
  StateDistribution(int step, int tip_count, int min_weight,
                    std::vector<double> mass)
      : step_(step),
        tip_count_(tip_count),
        min_weight_(min_weight),
        mass_(std::move(mass)) {}

  int step() const { return step_; }
  int tip_count() const { return tip_count_; }
  int min_weight() const { return min_weight_; }
  int max_weight() const {
    return min_weight_ + static_cast<int>(mass_.size()) - 1;
  }
  const std::vector<double>& mass() const { return mass_; }

  double prob_weight(int w) const;
  double expected_weight() const;
  double total_mass() const;

 private:
  int step_;
  int tip_count_;
  int min_weight_;
  std::vector<double> mass_;
};

/// Forward pass of the one-step transitions from {W=1, L=tip_count_high}:
/// while j >= 2 the mass splits 2/j up / 1-2/j flat and the tip count drops
/// by one; at j=1 every arrival adds one unit of weight deterministically.
StateDistribution h2lr_distribution(int k, int tip_count_high);

/// Expected weight at t seconds after the switch, mapping time to steps via
/// the mean interarrival: k = round(lambda_low * t).
double expected_weight_h2lr(double t, const NetworkParams& params);

struct ChainMcEstimate {
  double mean = 0.0;
  double se = 0.0;
};

/// Monte-Carlo variant of expected_weight_h2lr that samples exponential
/// interarrival times instead of using the mean-interarrival step mapping.
ChainMcEstimate h2lr_weight_mc(double t, const NetworkParams& params,
                               long replications, SeededStream& stream);

}  // namespace dagsim::analytic
