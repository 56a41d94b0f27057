#include "dagsim/race.hpp"

#include <cmath>
#include <vector>

#include "dagsim/parallel.hpp"

namespace dagsim::attack {

namespace {

enum Outcome : std::uint8_t { kFailure = 0, kSuccess = 1, kCensored = 2 };

Outcome run_race(const AttackScenario& sc, double q, int deficit_cutoff,
                 SeededStream& rng) {
  int deficit;
  if (sc.alpha == 0) {
    deficit = sc.beta + 1;
  } else {
    int honest = 0;
    int attacker = 0;
    while (honest < sc.alpha) {
      if (rng.bernoulli(q)) {
        ++attacker;
      } else {
        ++honest;
      }
    }
    if (attacker > sc.alpha + sc.beta) return kSuccess;
    deficit = sc.alpha + sc.beta - attacker + 1;
  }
  while (deficit > 0) {
    if (deficit >= deficit_cutoff) return kCensored;
    deficit += rng.bernoulli(q) ? -1 : +1;
  }
  return kSuccess;
}

}  // namespace

RaceEstimate monte_carlo_race(const AttackScenario& scenario,
                              long replications, int deficit_cutoff,
                              const SeededStream& stream) {
  if (replications < 1) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "race needs at least one replication");
  }
  if (deficit_cutoff < scenario.alpha + scenario.beta + 2) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "deficit cutoff must be at least alpha + beta + 2");
  }
  const RaceOdds odds = scenario.odds();

  std::vector<std::uint8_t> outcome(static_cast<std::size_t>(replications));
  parallel_for_index(outcome.size(), [&](std::size_t rep) {
    SeededStream rng = derive_stream(
        stream.master_seed(), stream.stream_index() + static_cast<std::uint64_t>(rep));
    outcome[rep] = run_race(scenario, odds.q, deficit_cutoff, rng);
  });

  long successes = 0;
  long censored = 0;
  for (std::uint8_t o : outcome) {
    if (o == kSuccess) ++successes;
    if (o == kCensored) ++censored;
  }

  RaceEstimate est;
  est.replications = replications;
  est.censored = censored;
  const double n = static_cast<double>(replications);
  est.probability = static_cast<double>(successes) / n;
  est.standard_error =
      std::sqrt(est.probability * (1.0 - est.probability) / n);
  est.censoring_bias_bound =
      (static_cast<double>(censored) / n) *
      catchup_probability(deficit_cutoff, odds.p, odds.q);
  return est;
}

RaceEstimate monte_carlo_race_h2lr(int m, const NetworkParams& params,
                                   double mu, long replications,
                                   int deficit_cutoff,
                                   const SeededStream& stream) {
  if (replications < 1) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "race needs at least one replication");
  }
  if (deficit_cutoff < m + 1) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "deficit cutoff must exceed the threshold");
  }
  const int start_tips = params.tip_count_high_int();
  const RaceOdds odds = race_probabilities(params.lambda_low, mu);

  std::vector<std::uint8_t> outcome(static_cast<std::size_t>(replications));
  parallel_for_index(outcome.size(), [&](std::size_t rep) {
    SeededStream rng =
        derive_stream(stream.master_seed(),
                      stream.stream_index() + static_cast<std::uint64_t>(rep));
    int weight = 1;
    for (int tips = start_tips; tips > 2; --tips) {
      if (rng.bernoulli(2.0 / tips)) ++weight;
    }
    AttackScenario sc;
    sc.lambda = params.lambda_low;
    sc.mu = mu;
    sc.alpha = std::max(m - weight, 0);
    sc.beta = 0;
    outcome[rep] = run_race(sc, odds.q, deficit_cutoff, rng);
  });

  long successes = 0;
  long censored = 0;
  for (std::uint8_t o : outcome) {
    if (o == kSuccess) ++successes;
    if (o == kCensored) ++censored;
  }
  RaceEstimate est;
  est.replications = replications;
  est.censored = censored;
  const double n = static_cast<double>(replications);
  est.probability = static_cast<double>(successes) / n;
  est.standard_error =
      std::sqrt(est.probability * (1.0 - est.probability) / n);
  est.censoring_bias_bound =
      (static_cast<double>(censored) / n) *
      catchup_probability(deficit_cutoff, odds.p, odds.q);
  return est;
}

}  // namespace dagsim::attack
