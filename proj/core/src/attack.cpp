#include "dagsim/attack.hpp"

#include <algorithm>
#include <cmath>

#include "dagsim/h2lr_chain.hpp"
#include "dagsim/weight_curves.hpp"

namespace dagsim::attack {

namespace {

void require_rates(double lambda, double mu) {
  if (!(lambda > 0.0) || !(mu > 0.0)) {
    throw ValidationError(ErrorCode::NonPositiveRate,
                          "race rates must be positive");
  }
}

void require_threshold(int m) {
  if (m < 2) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "confirmation threshold must be >= 2, got " +
                              std::to_string(m));
  }
}

double log_nb_pmf(int n, int alpha, double log_p, double log_q) {
  return std::lgamma(n + alpha) - std::lgamma(alpha) - std::lgamma(n + 1.0) +
         alpha * log_p + n * log_q;
}

// P{N > k} by direct tail summation. The term ratio q*(n+alpha)/(n+1) falls
// below 1 immediately for q < 1/2, so a geometric bound truncates the sum.
double nb_survival(int k, int alpha, double log_p, double log_q, double q) {
  double term = std::exp(log_nb_pmf(k + 1, alpha, log_p, log_q));
  double acc = 0.0;
  for (int n = k + 1;; ++n) {
    acc += term;
    const double ratio = q * (n + alpha) / (n + 1.0);
    if (ratio < 1.0 && term * ratio / (1.0 - ratio) < acc * 1e-16 + 1e-300) {
      break;
    }
    term *= ratio;
  }
  return acc;
}

}  // namespace

RaceOdds race_probabilities(double lambda, double mu) {
  require_rates(lambda, mu);
  return RaceOdds{lambda / (lambda + mu), mu / (lambda + mu)};
}

double negative_binomial_pmf(int n, int alpha, double p, double q) {
  if (alpha < 1) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "negative binomial needs alpha >= 1");
  }
  if (n < 0) return 0.0;
  return std::exp(log_nb_pmf(n, alpha, std::log(p), std::log(q)));
}

double catchup_probability(int deficit, double p, double q) {
  if (deficit <= 0 || p <= q) return 1.0;
  return std::pow(q / p, deficit);
}

// Both success probabilities below sum positive contributions only
// (the survival mass plus the per-n catch-up mass), which is algebraically
// equal to the folded 1-minus-sum form but keeps full relative precision
// when the result is small.
double attack_success(int alpha, double p, double q) {
  if (alpha < 0) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "alpha must be non-negative");
  }
  if (p <= q) return 1.0;
  if (alpha == 0) return q / p;
  const double log_p = std::log(p);
  const double log_q = std::log(q);
  const double log_ratio = log_q - log_p;
  double acc = nb_survival(alpha, alpha, log_p, log_q, q);
  for (int n = 0; n <= alpha; ++n) {
    acc += std::exp(log_nb_pmf(n, alpha, log_p, log_q) +
                    (alpha - n + 1) * log_ratio);
  }
  return std::min(acc, 1.0);
}

double attack_success_with_gap(int alpha, int beta, double p, double q) {
  if (alpha < 0 || beta < 0) {
    throw ValidationError(ErrorCode::InvalidThreshold,
                          "alpha and beta must be non-negative");
  }
  if (p <= q) return 1.0;
  if (alpha == 0) return catchup_probability(beta + 1, p, q);
  const double log_p = std::log(p);
  const double log_q = std::log(q);
  const double log_ratio = log_q - log_p;
  double acc = nb_survival(alpha + beta, alpha, log_p, log_q, q);
  for (int n = 0; n <= alpha + beta; ++n) {
    acc += std::exp(log_nb_pmf(n, alpha, log_p, log_q) +
                    (alpha + beta - n + 1) * log_ratio);
  }
  return std::min(acc, 1.0);
}

double attack_success_regime(int m, LoadRegime regime,
                             const NetworkParams& params, double mu,
                             H2lrAttackMode mode) {
  require_threshold(m);
  switch (regime) {
    case LoadRegime::high: {
      const RaceOdds odds = race_probabilities(params.lambda_high, mu);
      if (odds.p <= odds.q) return 1.0;
      const auto adapt = analytic::adaptation_period(params.tip_count_high,
                                                     params.reveal_delay);
      const long end_weight = std::llround(adapt.weight_at_end);
      const int alpha =
          static_cast<int>(std::max<long>(m - end_weight + 1, 0));
      // alpha = 0 collapses to q/p = mu/lambda; dividing the rates directly
      // keeps that case exact.
      if (alpha == 0) return mu / params.lambda_high;
      return attack_success(alpha, odds.p, odds.q);
    }
    case LoadRegime::low: {
      const RaceOdds odds = race_probabilities(params.lambda_low, mu);
      // The payment is the only tip at its reveal, so the parasite chain can
      // attach no closer than one transaction below it.
      return attack_success_with_gap(m - 1, 1, odds.p, odds.q);
    }
    case LoadRegime::high_to_low: {
      if (mode == H2lrAttackMode::expected_value) {
        return attack_success_h2lr_expected(m, params, mu);
      }
      const RaceOdds odds = race_probabilities(params.lambda_low, mu);
      if (odds.p <= odds.q) return 1.0;
      const int tips = params.tip_count_high_int();
      const auto dist = analytic::h2lr_distribution(tips - 2, tips);
      double acc = 0.0;
      for (int w = dist.min_weight(); w <= dist.max_weight(); ++w) {
        const int alpha = std::max(m - w, 0);
        acc += dist.prob_weight(w) * attack_success(alpha, odds.p, odds.q);
      }
      return acc;
    }
    case LoadRegime::low_to_high: {
      const RaceOdds odds = race_probabilities(params.lambda_high, mu);
      return attack_success_with_gap(m - 1, 1, odds.p, odds.q);
    }
  }
  throw ValidationError(ErrorCode::RegimeConditionViolated, "unknown regime");
}

double attack_success_h2lr_expected(int m, const NetworkParams& params,
                                    double mu) {
  require_threshold(m);
  const RaceOdds odds = race_probabilities(params.lambda_low, mu);
  if (odds.p <= odds.q) return 1.0;
  const int tips = params.tip_count_high_int();
  const double mean_weight =
      analytic::h2lr_distribution(tips - 2, tips).expected_weight();
  const int alpha =
      static_cast<int>(std::max<long>(std::llround(m - mean_weight), 0));
  if (alpha == 0) return mu / params.lambda_low;
  return attack_success(alpha, odds.p, odds.q);
}

}  // namespace dagsim::attack
