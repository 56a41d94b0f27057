#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dagsim/ledger.hpp"

using namespace dagsim;
using namespace dagsim::sim;

TEST_CASE("genesis is visible from the start") {
  LedgerState ledger(1.0);
  CHECK(ledger.visible_tip_count() == 1);
  CHECK(ledger.revealed_count() == 1);
  CHECK(ledger.transaction(0).reveal_time == 0.0);
}

TEST_CASE("single-tip selection approves the lone tip") {
  LedgerState ledger(1.0);
  SeededStream rng(1, 0);
  const auto choice = tip_select(ledger, rng);
  CHECK(choice.count == 1);
  CHECK(choice.ids[0] == 0);
}

TEST_CASE("issue and reveal move tips through the pipeline") {
  LedgerState ledger(1.0);
  SeededStream rng(2, 0);
  const auto id = ledger.issue(0.5, Issuer::honest, rng);
  CHECK(id == 1);
  // Still hidden: genesis remains the only visible tip.
  CHECK(ledger.visible_tip_count() == 1);
  CHECK(ledger.next_reveal_time() == 1.5);
  ledger.reveal_next();
  CHECK(ledger.visible_tip_count() == 1);
  CHECK(ledger.visible_tips()[0] == 1);
}

TEST_CASE("two-tip selection picks distinct parents") {
  LedgerState ledger(1.0);
  SeededStream rng(3, 0);
  ledger.issue(0.1, Issuer::honest, rng);
  ledger.issue(0.2, Issuer::honest, rng);
  ledger.reveal_next();
  ledger.reveal_next();
  REQUIRE(ledger.visible_tip_count() == 2);
  for (int i = 0; i < 200; ++i) {
    const auto choice = tip_select(ledger, rng);
    REQUIRE(choice.count == 2);
    CHECK(choice.ids[0] != choice.ids[1]);
  }
}

TEST_CASE("parents always precede children") {
  LedgerState ledger(0.5);
  SeededStream rng(4, 0);
  double t = 0.1;
  for (int i = 0; i < 500; ++i, t += 0.05) {
    while (ledger.next_reveal_time() <= t) ledger.reveal_next();
    const auto id = ledger.issue(t, Issuer::honest, rng);
    const auto& tx = ledger.transaction(id);
    for (int p = 0; p < tx.parent_count; ++p) CHECK(tx.parents[p] < id);
    CHECK(tx.reveal_time == tx.issue_time + 0.5);
  }
}

TEST_CASE("uniform selection hits a fixed tip at rate two over L") {
  // A hundred transactions issued inside one reveal window all approve
  // genesis; once they reveal the frontier has exactly a hundred tips and a
  // fixed tip should be selected at rate 2/L = 0.02.
  LedgerState ledger(1.0);
  SeededStream rng(5, 0);
  for (int i = 0; i < 100; ++i) {
    ledger.issue(0.001 * (i + 1), Issuer::honest, rng);
  }
  while (ledger.has_pending()) ledger.reveal_next();
  REQUIRE(ledger.visible_tip_count() == 100);
  const std::size_t tips = ledger.visible_tip_count();
  const std::uint32_t fixed = ledger.visible_tips()[tips / 2];
  const long trials = 1'000'000;
  long hits = 0;
  for (long i = 0; i < trials; ++i) {
    const auto choice = tip_select(ledger, rng);
    if (choice.ids[0] == fixed || choice.ids[1] == fixed) ++hits;
  }
  const double expected = 2.0 / static_cast<double>(tips);
  const double freq = static_cast<double>(hits) / trials;
  const double se = std::sqrt(expected * (1 - expected) / trials);
  CHECK(std::abs(freq - expected) <= 3.0 * se);
}

TEST_CASE("incremental tip set matches a from-scratch audit") {
  LedgerState ledger(0.7);
  SeededStream rng(6, 0);
  double t = 0.0;
  for (int i = 0; i < 400; ++i) {
    t += rng.exponential(2.0);
    while (ledger.next_reveal_time() <= t) ledger.reveal_next();
    ledger.issue(t, Issuer::honest, rng);

    auto audited = ledger.audit_visible_tips();
    auto tracked = ledger.visible_tips();
    std::sort(audited.begin(), audited.end());
    std::sort(tracked.begin(), tracked.end());
    CHECK(audited == tracked);
  }
}

TEST_CASE("conservation: revealed transactions are tips or covered") {
  LedgerState ledger(1.0);
  SeededStream rng(7, 0);
  double t = 0.0;
  for (int i = 0; i < 300; ++i) {
    t += rng.exponential(5.0);
    while (ledger.next_reveal_time() <= t) ledger.reveal_next();
    ledger.issue(t, Issuer::honest, rng);
  }
  // Count revealed transactions covered by a revealed child.
  std::size_t covered = 0;
  std::vector<bool> seen(ledger.size(), false);
  for (std::uint32_t id = 0; id < ledger.size(); ++id) {
    const auto& tx = ledger.transaction(id);
    if (tx.reveal_time > ledger.now()) continue;
    for (int p = 0; p < tx.parent_count; ++p) {
      if (!seen[tx.parents[p]]) {
        seen[tx.parents[p]] = true;
        ++covered;
      }
    }
  }
  CHECK(ledger.revealed_count() == ledger.visible_tip_count() + covered);
}
