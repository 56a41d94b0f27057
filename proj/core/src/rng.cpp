#include "dagsim/rng.hpp"

#include <cmath>

namespace dagsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace

SeededStream::SeededStream(std::uint64_t master_seed,
                           std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  std::uint64_t mix = master_seed;
  std::uint64_t a = splitmix64(mix);
  mix ^= stream_index * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull;
  for (auto& word : state_) word = splitmix64(mix);
  state_[0] ^= a;
  // A zero state would be absorbing; splitmix output never is, but guard.
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t SeededStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double SeededStream::next_unit() {
  // 53 random bits mapped to (0, 1]; never returns 0, so log() is safe.
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t SeededStream::uniform_below(std::uint64_t n) {
  // Rejection sampling on the top of the range to stay unbiased.
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t v = next_u64();
  while (v >= limit) v = next_u64();
  return v % n;
}

double SeededStream::exponential(double rate) {
  return -std::log(next_unit()) / rate;
}

}  // namespace dagsim
