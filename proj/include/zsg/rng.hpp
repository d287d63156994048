#pragma once

#include <cstdint>
#include <vector>

namespace zsg {

/// SplitMix64, used here as a counter-based generator: output i for seed s
/// is finalize(s + (i+1) * 0x9e3779b97f4a7c15). The (seed -> stream)
/// mapping is part of the external interface; the first four outputs for
/// seed 0 are frozen in tests/data/splitmix64_seed0.txt.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw in [0, bound) by rejection.
  uint64_t next_below(uint64_t bound) {
    // largest multiple of bound that fits in 64 bits
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  uint64_t state_;
};

/// Derives the seed of replication `rep` from the master seed, so Monte
/// Carlo results do not depend on execution order or worker count.
/// mix(seed, rep) = finalize(finalize(seed) xor (rep + golden)).
inline uint64_t mix_seed(uint64_t seed, uint64_t rep) {
  auto finalize = [](uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return finalize(finalize(seed + 0x9e3779b97f4a7c15ULL) ^
                  (rep + 0x9e3779b97f4a7c15ULL));
}

/// Fisher-Yates with unbiased index draws.
template <typename T>
void shuffle_in_place(std::vector<T>& items, SplitMix64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace zsg
