#pragma once

#include "dagsim/params.hpp"

namespace dagsim::attack {

/// Per-round probabilities that the next transaction in the race is honest
/// (p) or adversarial (q); p + q = 1.
struct RaceOdds {
  double p = 0.0;
  double q = 0.0;
};

RaceOdds race_probabilities(double lambda, double mu);

/// P{N = n} for the number of attacker transactions issued by the time the
/// honest side reaches alpha, evaluated in log space. Requires alpha >= 1.
double negative_binomial_pmf(int n, int alpha, double p, double q);

/// Probability that a random walk with per-round win chance q ever erases a
/// head start of `deficit` rounds: (q/p)^deficit when p > q, otherwise 1.
double catchup_probability(int deficit, double p, double q);

/// Probability of a successful double-spend race with alpha honest
/// transactions issued before the payment confirms and the parasite chain
/// attached at the tips.
double attack_success(int alpha, double p, double q);

/// Same race with the parasite chain attached `beta` transactions below the
/// tips, so the attacker starts that many rounds behind. Reduces to
/// attack_success when beta = 0.
double attack_success_with_gap(int alpha, int beta, double p, double q);

/// Whether the high-to-low result mixes over the full weight distribution at
/// the two-tip step or collapses it to its expected value first.
enum class H2lrAttackMode { distribution, expected_value };

/// Success probability of the best-timed parasite chain attack per regime,
/// with the attacker issuing at rate mu against validated params.
double attack_success_regime(
    int m, LoadRegime regime, const NetworkParams& params, double mu,
    H2lrAttackMode mode = H2lrAttackMode::distribution);

/// Expected-value variant for the high-to-low regime: the weight at the
/// two-tip step is replaced by its mean W0 before entering the race.
double attack_success_h2lr_expected(int m, const NetworkParams& params,
                                    double mu);

}  // namespace dagsim::attack
