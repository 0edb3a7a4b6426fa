#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace surfke {

/// SplitMix64 finalizer. Used for seeding and for substream derivation.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Purpose tags for substreams. Every random decision in the pipeline draws
/// from a stream keyed by (master seed, purpose, key...).
enum class Stream : std::uint64_t {
  kWalk = 1,
  kEmbeddingInit = 2,
  kNegativeSampling = 3,
  kEpochShuffle = 4,
  kFoldShuffle = 5,
  kRandomBaseline = 6,
};

/// xoshiro256** 1.0. Output is fully specified, so sequences are identical
/// on every platform and compiler (unlike std:: distributions).
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  /// Substream rule: fold (seed, purpose, keys...) through SplitMix64 and seed
  /// xoshiro with the result. Distinct key tuples give unrelated streams.
  static Rng substream(std::uint64_t seed, Stream purpose,
                       std::initializer_list<std::uint64_t> keys = {}) {
    std::uint64_t h = seed;
    std::uint64_t acc = splitmix64(h);
    acc ^= static_cast<std::uint64_t>(purpose) * 0xD6E8FEB86659FD93ULL;
    h = acc;
    acc = splitmix64(h);
    for (std::uint64_t k : keys) {
      h = acc ^ (k + 0x632BE59BD9B4E019ULL);
      acc = splitmix64(h);
    }
    return Rng(acc);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Unbiased (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Fisher-Yates shuffle driven by below(); portable, unlike std::shuffle.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace surfke
