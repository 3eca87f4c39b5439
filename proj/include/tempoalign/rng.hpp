#pragma once

#include <cmath>
#include <cstdint>

namespace tempoalign {

// Counter-based RNG. Streams are derived by key, not by sequential draws, so
// parallel and serial generation of the same (key, counter) pairs coincide.

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct RngKey {
  std::uint64_t key = 0;
};

inline RngKey rng_key(std::uint64_t seed) { return RngKey{mix64(seed)}; }

// Fold a stream id into a key. derive(derive(k, a), b) != derive(derive(k, b), a).
inline RngKey derive(RngKey k, std::uint64_t id) {
  return RngKey{mix64(k.key ^ mix64(id + 0x7F4A7C15ull))};
}

inline RngKey derive(RngKey k, std::uint64_t a, std::uint64_t b) {
  return derive(derive(k, a), b);
}

class CounterRng {
 public:
  CounterRng() = default;
  explicit CounterRng(RngKey k) : key_(k.key) {}
  CounterRng(RngKey k, std::uint64_t counter) : key_(k.key), counter_(counter) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Lemire's multiply-shift; bias is < 2^-64 per draw.
  std::uint64_t next_below(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller; consumes exactly two draws per call.
  double next_gaussian() {
    double u1 = 1.0 - next_unit();  // (0, 1]
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace tempoalign
