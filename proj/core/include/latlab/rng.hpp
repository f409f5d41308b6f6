#pragma once

#include <cstdint>
#include <vector>

#include "latlab/rational.hpp"

namespace latlab {

// Deterministic splitmix64 generator. Used for all fuzzing so that reports
// are byte-identical across runs with the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant for
  // fuzzing purposes and keeps the stream portable.
  long long range(long long lo, long long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool flip() { return (next() & 1) != 0; }

  // Random rational p/q with p in [lo*maxden, hi*maxden] and q in [1, maxden].
  Rat rat(long long lo, long long hi, long long maxden = 4) {
    long long den = range(1, maxden);
    long long num = range(lo * den, hi * den);
    return make_rat(num, den);
  }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(range(0, static_cast<long long>(xs.size()) - 1))];
  }

 private:
  std::uint64_t state_;
};

}  // namespace latlab
