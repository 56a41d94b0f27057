#pragma once

#include <cstdint>

namespace dagsim {

/// Deterministic pseudo-random stream (xoshiro256++ seeded through
/// splitmix64). Identical (master_seed, stream_index) pairs replay the same
/// sequence on any platform; distinct indices give statistically independent
/// streams, so every simulation replication owns one stream and replications
/// can run in any order.
class SeededStream {
 public:
  SeededStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();

  /// Uniform double in (0, 1].
  double next_unit();

  /// Unbiased uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n);

  bool bernoulli(double p) { return next_unit() <= p; }

  /// Exponential variate with the given rate (mean 1/rate).
  double exponential(double rate);

 private:
  std::uint64_t state_[4];
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
};

/// Deterministic, collision-free mapping from (seed, index) to a stream.
inline SeededStream derive_stream(std::uint64_t master_seed,
                                  std::uint64_t stream_index) {
  return SeededStream(master_seed, stream_index);
}

}  // namespace dagsim
