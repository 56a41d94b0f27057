#include "dagsim/h2lr_chain.hpp"

#include <cmath>
#include <numeric>

namespace dagsim::analytic {

double StateDistribution::prob_weight(int w) const {
  const int i = w - min_weight_;
  if (i < 0 || i >= static_cast<int>(mass_.size())) return 0.0;
  return mass_[static_cast<std::size_t>(i)];
}

double StateDistribution::expected_weight() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    acc += mass_[i] * (min_weight_ + static_cast<double>(i));
  }
  return acc;
}

double StateDistribution::total_mass() const {
  return std::accumulate(mass_.begin(), mass_.end(), 0.0);
}

StateDistribution h2lr_distribution(int k, int tip_count_high) {
  if (k < 0) {
    throw ValidationError(ErrorCode::RegimeConditionViolated,
                          "chain step must be non-negative");
  }
  if (tip_count_high < 2) {
    throw ValidationError(ErrorCode::RegimeConditionViolated,
                          "high-to-low chain needs an initial tip count >= 2");
  }

  std::vector<double> mass{1.0};
  int min_w = 1;
  for (int s = 0; s < k; ++s) {
    const int j = std::max(tip_count_high - s, 1);
    if (j == 1) {
      ++min_w;  // forced approval, whole distribution shifts up
      continue;
    }
    const double up = 2.0 / j;
    std::vector<double> next(mass.size() + 1, 0.0);
    for (std::size_t i = 0; i < mass.size(); ++i) {
      next[i] += mass[i] * (1.0 - up);
      next[i + 1] += mass[i] * up;
    }
    mass = std::move(next);
    if (mass.front() == 0.0) {  // exact at j == 2, where up == 1
      mass.erase(mass.begin());
      ++min_w;
    }
  }
  return StateDistribution(k, std::max(tip_count_high - k, 1), min_w,
                           std::move(mass));
}

double expected_weight_h2lr(double t, const NetworkParams& params) {
  const int k = static_cast<int>(std::llround(params.lambda_low * t));
  return h2lr_distribution(k, params.tip_count_high_int()).expected_weight();
}

ChainMcEstimate h2lr_weight_mc(double t, const NetworkParams& params,
                               long replications, SeededStream& stream) {
  const int start_tips = params.tip_count_high_int();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long rep = 0; rep < replications; ++rep) {
    double clock = stream.exponential(params.lambda_low);
    int weight = 1;
    int tips = start_tips;
    while (clock <= t) {
      if (tips >= 2) {
        if (stream.bernoulli(2.0 / tips)) ++weight;
        --tips;
      } else {
        ++weight;
      }
      clock += stream.exponential(params.lambda_low);
    }
    sum += weight;
    sum_sq += static_cast<double>(weight) * weight;
  }
  ChainMcEstimate est;
  const double n = static_cast<double>(replications);
  est.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
  est.se = std::sqrt(var / n);
  return est;
}

}  // namespace dagsim::analytic
