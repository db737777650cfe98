#pragma once

#include <cstdint>
#include <vector>

namespace wreathcert {

std::vector<unsigned long> prime_factors(unsigned long n);
bool is_prime(unsigned long n);

// Deterministic RNG wrapper. Draws are reduced by modulo so a logged seed
// reproduces streams bit-for-bit regardless of library distribution details.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    // splitmix64; stable across platforms.
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); n is tiny relative to 2^64.
  size_t below(size_t n) { return static_cast<size_t>(next() % n); }

 private:
  uint64_t state_;
};

}  // namespace wreathcert
