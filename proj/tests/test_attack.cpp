#include <doctest.h>

#include <cmath>

#include "dagsim/attack.hpp"
#include "dagsim/h2lr_chain.hpp"
#include "exact_rational.hpp"

using namespace dagsim;
using namespace dagsim::attack;

namespace {

const NetworkParams kRef = validate({50.0, 0.5, 1.0});

// The success probability as printed: one minus the folded finite sum.
// Numerically fine at moderate alpha; the library holds to full relative
// precision by summing positive parts instead.
double folded_attack_success(int alpha, double p, double q) {
  if (p <= q) return 1.0;
  if (alpha == 0) return q / p;
  double sum = 0.0;
  for (int n = 0; n <= alpha; ++n) {
    const double coeff = std::exp(std::lgamma(n + alpha) -
                                  std::lgamma(alpha) - std::lgamma(n + 1.0));
    sum += coeff * (std::pow(p, alpha) * std::pow(q, n) -
                    std::pow(p, n - 1.0) * std::pow(q, alpha + 1.0));
  }
  return 1.0 - sum;
}

}  // namespace

TEST_CASE("race odds") {
  const RaceOdds even = race_probabilities(3.0, 3.0);
  CHECK(even.p == 0.5);
  CHECK(even.q == 0.5);
  const RaceOdds two_one = race_probabilities(50.0, 25.0);
  CHECK(two_one.p == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(two_one.q == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  for (double c : {0.1, 2.0, 1000.0}) {
    const RaceOdds scaled = race_probabilities(50.0 * c, 25.0 * c);
    CHECK(scaled.p == doctest::Approx(two_one.p).epsilon(1e-12));
  }
  CHECK_THROWS_AS(race_probabilities(0.0, 1.0), ValidationError);
}

TEST_CASE("negative binomial pmf") {
  CHECK(negative_binomial_pmf(0, 1, 0.6, 0.4) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(negative_binomial_pmf(2, 2, 0.6, 0.4) ==
        doctest::Approx(0.1728).epsilon(1e-12));

  // Adaptive truncation: the mass sums to one.
  for (int alpha : {1, 3, 10}) {
    for (double p : {0.55, 0.7, 0.9}) {
      double total = 0.0;
      double term;
      int n = 0;
      do {
        term = negative_binomial_pmf(n, alpha, p, 1.0 - p);
        total += term;
        ++n;
      } while (term > 1e-14 || n < alpha + 5);
      CHECK(std::abs(total - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("catch-up probability") {
  CHECK(catchup_probability(5, 0.4, 0.6) == 1.0);
  CHECK(catchup_probability(0, 0.7, 0.3) == 1.0);
  CHECK(catchup_probability(2, 2.0 / 3.0, 1.0 / 3.0) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("attack success basics") {
  CHECK(attack_success(0, 2.0 / 3.0, 1.0 / 3.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  for (int alpha : {0, 1, 5, 20}) {
    CHECK(attack_success(alpha, 0.45, 0.55) == 1.0);
    CHECK(attack_success(alpha, 0.5, 0.5) == 1.0);
  }
}

TEST_CASE("library form equals the folded printed form") {
  for (int alpha : {1, 2, 5, 10, 20}) {
    for (double p : {0.55, 0.6, 0.7, 0.9}) {
      const double lib = attack_success(alpha, p, 1.0 - p);
      const double folded = folded_attack_success(alpha, p, 1.0 - p);
      CHECK(lib == doctest::Approx(folded).epsilon(1e-9));
    }
  }
}

TEST_CASE("gap formula reduces to the plain formula at beta zero") {
  for (int alpha = 1; alpha <= 30; ++alpha) {
    for (double p : {0.55, 0.7, 0.9}) {
      const double with_gap = attack_success_with_gap(alpha, 0, p, 1.0 - p);
      const double plain = attack_success(alpha, p, 1.0 - p);
      CHECK(std::abs(with_gap - plain) <= 1e-12 * plain);
    }
  }
}

TEST_CASE("floating point matches exact rationals to 1e-12 relative") {
  using oracle::cpp_rational;
  const std::pair<int, int> fractions[] = {{11, 20}, {3, 5}, {7, 10}, {9, 10}};
  for (const auto& [num, den] : fractions) {
    const cpp_rational pr(num, den);
    const double p = static_cast<double>(num) / den;
    const double q = 1.0 - p;
    for (int alpha : {0, 1, 2, 5, 9, 15}) {
      for (int beta : {0, 1, 5, 15}) {
        if (alpha + beta > 30) continue;
        const double lib = attack_success_with_gap(alpha, beta, p, q);
        const double exact = static_cast<double>(
            oracle::exact_attack_success_with_gap(alpha, beta, pr));
        CHECK(lib == doctest::Approx(exact).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("success probabilities are proper and monotone") {
  for (double p : {0.55, 0.7, 0.9}) {
    const double q = 1.0 - p;
    double prev_beta = 2.0;
    for (int beta = 0; beta <= 10; ++beta) {
      const double v = attack_success_with_gap(1, beta, p, q);
      CHECK(v > 0.0);
      CHECK(v < 1.0);
      CHECK(v < prev_beta);
      prev_beta = v;
    }
    double prev_alpha = 2.0;
    for (int alpha = 0; alpha <= 10; ++alpha) {
      const double v = attack_success_with_gap(alpha, 1, p, q);
      CHECK(v < prev_alpha);
      prev_alpha = v;
    }
  }
  // Monotone non-decreasing in the attacker rate.
  double prev = 0.0;
  for (double mu = 5.0; mu <= 45.0; mu += 5.0) {
    const RaceOdds odds = race_probabilities(50.0, mu);
    const double v = attack_success_with_gap(3, 1, odds.p, odds.q);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("high-load regime: flat below the adaptation weight, exact ratio") {
  const double mu = 10.0;
  const double v50 =
      attack_success_regime(50, LoadRegime::high, kRef, mu);
  const double v100 =
      attack_success_regime(100, LoadRegime::high, kRef, mu);
  CHECK(v50 == v100);
  CHECK(v50 == mu / 50.0);  // q/p collapses to mu/lambda exactly
}

TEST_CASE("attacker at or above the honest rate always wins") {
  for (auto regime : {LoadRegime::high, LoadRegime::low,
                      LoadRegime::high_to_low, LoadRegime::low_to_high}) {
    const double lambda =
        regime == LoadRegime::high || regime == LoadRegime::low_to_high
            ? kRef.lambda_high
            : kRef.lambda_low;
    CHECK(attack_success_regime(100, regime, kRef, lambda) == 1.0);
    CHECK(attack_success_regime(100, regime, kRef, lambda * 2.0) == 1.0);
  }
}

TEST_CASE("regime orderings across the ratio grid") {
  for (double ratio : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int m : {50, 100, 150, 200}) {
      const double hr = attack_success_regime(
          m, LoadRegime::high, kRef, ratio * kRef.lambda_high);
      const double l2hr = attack_success_regime(
          m, LoadRegime::low_to_high, kRef, ratio * kRef.lambda_high);
      CHECK(hr >= l2hr - 1e-12);
      const double h2lr = attack_success_regime(
          m, LoadRegime::high_to_low, kRef, ratio * kRef.lambda_low);
      const double lr = attack_success_regime(m, LoadRegime::low, kRef,
                                              ratio * kRef.lambda_low);
      CHECK(h2lr >= lr - 1e-12);
    }
  }
}

TEST_CASE("expected-value variant: first case and the large-m limit") {
  const double mu = 0.25;
  // Mean weight at the two-tip step is ~8.37 for a hundred initial tips, so
  // any threshold below it collapses to the ratio.
  CHECK(attack_success_h2lr_expected(5, kRef, mu) ==
        doctest::Approx(mu / kRef.lambda_low).epsilon(1e-12));
  // Against the attacker's rate advantage both variants agree at one.
  CHECK(attack_success_regime(50, LoadRegime::high_to_low, kRef, 0.6,
                              H2lrAttackMode::distribution) == 1.0);
  CHECK(attack_success_h2lr_expected(50, kRef, 0.6) == 1.0);
}

TEST_CASE("distribution and expected-value variants converge in m") {
  const double mu = 0.25;
  const int tips = kRef.tip_count_high_int();
  const double w0 =
      analytic::h2lr_distribution(tips - 2, tips).expected_weight();
  const int base = static_cast<int>(std::llround(w0));
  double prev = 2.0;
  for (int offset : {10, 50, 100, 200, 300}) {
    const int m = base + offset;
    const double dist = attack_success_regime(
        m, LoadRegime::high_to_low, kRef, mu, H2lrAttackMode::distribution);
    const double expect = attack_success_h2lr_expected(m, kRef, mu);
    const double diff = std::abs(dist - expect);
    CHECK(diff <= prev + 1e-15);
    prev = diff;
  }
}
