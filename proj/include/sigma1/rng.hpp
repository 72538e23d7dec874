/**
 * @file rng.hpp
 * @brief Deterministic seeded randomness for property tests and CLI sampling.
 *
 * A thin wrapper over std::mt19937_64.  Bounded draws use plain modulo
 * reduction instead of std::uniform_int_distribution on purpose: the
 * distribution's output is implementation-defined, and byte-identical output
 * per seed across toolchains matters more here than the negligible modulo
 * bias.
 */
#ifndef SIGMA1_RNG_HPP
#define SIGMA1_RNG_HPP

#include <cstdint>
#include <random>

namespace sigma1 {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Uniform-ish draw in [0, n), n > 0.
  int64_t below(int64_t n) { return static_cast<int64_t>(eng_() % static_cast<uint64_t>(n)); }

  /// Draw in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sigma1

#endif  // SIGMA1_RNG_HPP
