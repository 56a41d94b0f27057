#include "dagsim/ledger.hpp"

#include <algorithm>

namespace dagsim::sim {

LedgerState::LedgerState(double reveal_delay) : reveal_delay_(reveal_delay) {
  // Genesis is already visible at t = 0.
  Transaction genesis;
  genesis.id = 0;
  genesis.issue_time = -reveal_delay;
  genesis.reveal_time = 0.0;
  txs_.push_back(genesis);
  tip_slot_.push_back(npos);
  revealed_count_ = 1;
  add_tip(0);
}

std::uint32_t LedgerState::issue(double t, Issuer issuer, SeededStream& rng) {
  const ParentChoice choice = tip_select(*this, rng);
  Transaction tx;
  tx.id = static_cast<std::uint32_t>(txs_.size());
  tx.issue_time = t;
  tx.reveal_time = t + reveal_delay_;
  tx.parents = choice.ids;
  tx.parent_count = static_cast<std::uint8_t>(choice.count);
  tx.issuer = issuer;
  if (issuer == Issuer::observed) {
    observed_id_ = tx.id;
    tx.approves_observed = true;
  } else {
    for (int i = 0; i < choice.count; ++i) {
      if (txs_[choice.ids[i]].approves_observed) tx.approves_observed = true;
    }
  }
  txs_.push_back(tx);
  tip_slot_.push_back(npos);
  pending_.push_back(tx.id);
  now_ = t;
  return tx.id;
}

double LedgerState::next_reveal_time() const {
  if (pending_.empty()) return std::numeric_limits<double>::infinity();
  return txs_[pending_.front()].reveal_time;
}

std::uint32_t LedgerState::reveal_next() {
  const std::uint32_t id = pending_.front();
  pending_.pop_front();
  const Transaction& tx = txs_[id];
  for (int i = 0; i < tx.parent_count; ++i) {
    remove_tip(tx.parents[i]);  // no-op if already covered
  }
  add_tip(id);
  ++revealed_count_;
  now_ = tx.reveal_time;
  return id;
}

void LedgerState::remove_tip(std::uint32_t id) {
  const std::uint32_t slot = tip_slot_[id];
  if (slot == npos) return;
  const std::uint32_t moved = tips_.back();
  tips_[slot] = moved;
  tip_slot_[moved] = slot;
  tips_.pop_back();
  tip_slot_[id] = npos;
}

void LedgerState::add_tip(std::uint32_t id) {
  tip_slot_[id] = static_cast<std::uint32_t>(tips_.size());
  tips_.push_back(id);
}

std::vector<std::uint32_t> LedgerState::audit_visible_tips() const {
  std::vector<bool> covered(txs_.size(), false);
  for (const Transaction& tx : txs_) {
    if (tx.reveal_time > now_) continue;
    for (int i = 0; i < tx.parent_count; ++i) covered[tx.parents[i]] = true;
  }
  std::vector<std::uint32_t> out;
  for (const Transaction& tx : txs_) {
    if (tx.reveal_time <= now_ && !covered[tx.id]) out.push_back(tx.id);
  }
  return out;
}

ParentChoice tip_select(const LedgerState& state, SeededStream& rng) {
  const auto& tips = state.visible_tips();
  if (tips.empty()) {
    throw ValidationError(ErrorCode::EmptyTipSet, "no visible tips");
  }
  ParentChoice choice;
  if (tips.size() == 1) {
    choice.ids[0] = tips[0];
    choice.count = 1;
    return choice;
  }
  const std::uint64_t n = tips.size();
  const std::uint64_t first = rng.uniform_below(n);
  std::uint64_t second = rng.uniform_below(n - 1);
  if (second >= first) ++second;
  choice.ids[0] = tips[first];
  choice.ids[1] = tips[second];
  choice.count = 2;
  return choice;
}

}  // namespace dagsim::sim
