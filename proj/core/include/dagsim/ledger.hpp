#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "dagsim/errors.hpp"
#include "dagsim/rng.hpp"

namespace dagsim::sim {

enum class Issuer : std::uint8_t { honest, observed, attacker };

struct Transaction {
  std::uint32_t id = 0;
  double issue_time = 0.0;
  double reveal_time = 0.0;  // issue_time + reveal_delay
  std::array<std::uint32_t, 2> parents{0, 0};
  std::uint8_t parent_count = 0;  // 0 only for genesis
  Issuer issuer = Issuer::honest;
  bool approves_observed = false;  // reverse-reachability to the observed
};

struct ParentChoice {
  std::array<std::uint32_t, 2> ids{0, 0};
  int count = 0;
};

/// The simulated DAG. Transactions become visible (and selectable) only at
/// their reveal time; a visible tip stays selectable until some *revealed*
/// transaction covers it, so tips selected by still-hidden transactions keep
/// attracting approvals in the meantime.
class LedgerState {
 public:
  static constexpr std::uint32_t npos =
      std::numeric_limits<std::uint32_t>::max();

  explicit LedgerState(double reveal_delay);

  double now() const { return now_; }
  std::size_t size() const { return txs_.size(); }
  std::size_t revealed_count() const { return revealed_count_; }
  std::size_t visible_tip_count() const { return tips_.size(); }
  const std::vector<std::uint32_t>& visible_tips() const { return tips_; }
  const Transaction& transaction(std::uint32_t id) const { return txs_[id]; }
  std::uint32_t observed_id() const { return observed_id_; }

  /// Issues a transaction at time t with parents drawn by tip_select.
  std::uint32_t issue(double t, Issuer issuer, SeededStream& rng);

  bool has_pending() const { return !pending_.empty(); }
  /// Reveal time of the oldest hidden transaction (infinity when none).
  double next_reveal_time() const;
  /// Makes the oldest hidden transaction visible: retires its parents from
  /// the tip set (unless already covered) and adds it as a tip.
  std::uint32_t reveal_next();

  /// Recomputes the visible tip set from the raw transaction table; used by
  /// tests to audit the incremental bookkeeping.
  std::vector<std::uint32_t> audit_visible_tips() const;

 private:
  std::vector<Transaction> txs_;
  std::vector<std::uint32_t> tip_slot_;  // per tx: index into tips_, or npos
  std::vector<std::uint32_t> tips_;
  std::deque<std::uint32_t> pending_;  // FIFO: reveal order = issue order
  double now_ = 0.0;
  double reveal_delay_;
  std::size_t revealed_count_ = 0;
  std::uint32_t observed_id_ = npos;

  void remove_tip(std::uint32_t id);
  void add_tip(std::uint32_t id);
};

/// Uniform tip selection: two distinct visible tips without replacement, or
/// the single tip when only one is visible. Throws
/// ValidationError(EmptyTipSet) when no transaction is visible.
ParentChoice tip_select(const LedgerState& state, SeededStream& rng);

}  // namespace dagsim::sim
