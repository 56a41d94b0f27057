#pragma once

// Test-side oracles, kept independent of the library implementations they
// check: a step-by-step simulator of the tip-decline chain, an unrestricted
// forward distribution, the literal two-branch expected-delay expression,
// and a bare-bones race simulator.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dagsim/rng.hpp"

namespace oracle {

// One simulated chain path from (W=1, L=start_tips): returns W after k
// arrivals.
inline int chain_weight_after(int k, int start_tips,
                              dagsim::SeededStream& rng) {
  int w = 1;
  int tips = start_tips;
  for (int s = 0; s < k; ++s) {
    if (tips >= 2) {
      if (rng.next_unit() <= 2.0 / tips) ++w;
      --tips;
    } else {
      ++w;
    }
  }
  return w;
}

// First arrival index at which a simulated path reaches weight m.
inline int chain_confirmation_step(int m, int start_tips,
                                   dagsim::SeededStream& rng) {
  int w = 1;
  int tips = start_tips;
  int k = 0;
  while (w < m) {
    ++k;
    if (tips >= 2) {
      if (rng.next_unit() <= 2.0 / tips) ++w;
      --tips;
    } else {
      ++w;
    }
  }
  return k;
}

// Unrestricted forward pass: probs[w] = P{W(k) = w}. No absorption.
inline std::vector<double> chain_unrestricted(int k, int start_tips) {
  std::vector<double> probs(static_cast<std::size_t>(k) + 2, 0.0);
  probs[1] = 1.0;
  for (int s = 0; s < k; ++s) {
    std::vector<double> next(probs.size(), 0.0);
    const int j = std::max(start_tips - s, 1);
    for (std::size_t w = 1; w + 1 < probs.size(); ++w) {
      if (probs[w] == 0.0) continue;
      if (j >= 2) {
        next[w + 1] += probs[w] * (2.0 / j);
        next[w] += probs[w] * (1.0 - 2.0 / j);
      } else {
        next[w + 1] += probs[w];
      }
    }
    probs = std::move(next);
  }
  return probs;
}

// Literal two-branch expected confirmation delay: lattice hits weighted by
// the last-step selection factor, plus single-tip-line hits; probabilities
// come from the unrestricted pass above (first hits are automatically the
// only contributors because weight never decreases).
inline double literal_h2lr_delay(int m, int start_tips, double h_low) {
  const int L = start_tips;
  double steps = 0.0;
  if (m < L) {
    for (int k = m - 1; k <= L - 2; ++k) {
      const auto d = chain_unrestricted(k - 1, L);
      const double at_m1 =
          (m - 1 < static_cast<int>(d.size())) ? d[m - 1] : 0.0;
      steps += at_m1 * (2.0 / (L - k + 1)) * k;
    }
    for (int k = L - 1; k <= m + L - 3; ++k) {
      const auto d = chain_unrestricted(k, L);
      if (m < static_cast<int>(d.size())) steps += d[m] * k;
    }
  } else {
    for (int k = m - 1; k <= m + L - 3; ++k) {
      const auto d = chain_unrestricted(k, L);
      if (m < static_cast<int>(d.size())) steps += d[m] * k;
    }
  }
  return steps * h_low;
}

// Minimal race simulation: rounds are honest with probability p; success
// when the attacker ever leads by one net transaction past the combined
// head start.
inline bool race_once(int alpha, int beta, double p, int cutoff,
                      dagsim::SeededStream& rng) {
  const double q = 1.0 - p;
  int deficit = 0;
  if (alpha == 0) {
    deficit = beta + 1;
  } else {
    int honest = 0;
    int attacker = 0;
    while (honest < alpha) {
      if (rng.next_unit() <= q) {
        ++attacker;
      } else {
        ++honest;
      }
    }
    if (attacker > alpha + beta) return true;
    deficit = alpha + beta - attacker + 1;
  }
  while (deficit > 0) {
    if (deficit >= cutoff) return false;
    deficit += rng.next_unit() <= q ? -1 : +1;
  }
  return true;
}

}  // namespace oracle
