#ifndef LEXBETTI_RNG_HPP
#define LEXBETTI_RNG_HPP

#include <cstdint>
#include <random>

namespace lexbetti {

/// mt19937_64 with hand-rolled draws. The engine's output stream is pinned
/// by the standard; the standard *distributions* are not, and fuzz runs
/// promise byte-identical results for identical seeds across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound >= 1. Modulo bias is negligible for the
  /// tiny bounds used here and keeps the draw sequence trivially portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    return static_cast<double>(next()) < p * 18446744073709551616.0;  // 2^64
  }

  /// Stream-independent derived seed, splitmix64 finalizer.
  static std::uint64_t derive(std::uint64_t root, std::uint64_t index) {
    std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lexbetti

#endif
