#include <doctest.h>

#include <cmath>
#include <vector>

#include "dagsim/rng.hpp"

using namespace dagsim;

TEST_CASE("identical seed and index replay the same sequence") {
  SeededStream a(42, 0);
  SeededStream b(42, 0);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct stream indices diverge immediately") {
  SeededStream a(42, 0);
  SeededStream b(42, 1);
  CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("exponential draws have the right mean") {
  // Mean 2.0, a million draws: law of large numbers pins the sample mean
  // within one percent.
  SeededStream rng(7, 3);
  const int n = 1'000'000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.exponential(0.5);
  const double mean = sum / n;
  CHECK(std::abs(mean - 2.0) < 0.02);
}

TEST_CASE("exponential mean within three standard errors across rates") {
  for (double rate : {0.5, 1.0, 50.0}) {
    SeededStream rng(11, static_cast<std::uint64_t>(rate * 10));
    const int n = 100'000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rng.exponential(rate);
    const double mean = sum / n;
    const double se = (1.0 / rate) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mean - 1.0 / rate) < 3.0 * se);
  }
}

TEST_CASE("uniform_below covers the range uniformly") {
  SeededStream rng(5, 1);
  std::vector<int> counts(10, 0);
  const int n = 100'000;
  for (int i = 0; i < n; ++i) ++counts[rng.uniform_below(10)];
  for (int c : counts) {
    CHECK(c > n / 10 - 5 * 100);  // ~5 sigma band around n/10
    CHECK(c < n / 10 + 5 * 100);
  }
}

TEST_CASE("unit draws stay inside the half-open interval") {
  SeededStream rng(3, 3);
  for (int i = 0; i < 100'000; ++i) {
    const double u = rng.next_unit();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}
