#pragma once
// Deterministic cross-platform RNG. splitmix64 is fully specified by its
// update formula, unlike std::uniform_int_distribution, so seeded runs
// reproduce byte-for-byte on any platform. Streams are derived per sample
// index, never per worker, so the worker count cannot change the output.

#include <cstdint>

namespace liesc {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n). Modulo bias is negligible for the tiny n used
  // here and keeps the draw deterministic everywhere.
  long below(long n) { return static_cast<long>(next_u64() % static_cast<std::uint64_t>(n)); }
};

// Derives an independent stream for one sample of a seeded scan.
inline Rng stream_for(std::uint64_t seed, std::uint64_t index) {
  Rng mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
  std::uint64_t s = mixer.next_u64();
  return Rng(s);
}

}  // namespace liesc
