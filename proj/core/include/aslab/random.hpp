#pragma once

#include <cstdint>

#include "aslab/rational.hpp"

namespace aslab {

// Deterministic, platform-independent PRNG (splitmix64). The standard library
// distributions are implementation-defined, so all sampling goes through this.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    static RandomSource derived(std::uint64_t master, std::uint64_t index) {
        RandomSource r(master);
        std::uint64_t s = r.next() ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        return RandomSource(s);
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() { return (next() & 1) != 0; }
    int sign() { return coin() ? 1 : -1; }

    // Nonzero rational with small numerator/denominator.
    Rational small_rational(std::int64_t max_num = 4, std::int64_t max_den = 4) {
        std::int64_t n = uniform(1, max_num);
        std::int64_t d = uniform(1, max_den);
        return Rational(sign() * n, d);
    }

  private:
    std::uint64_t state_;
};

}  // namespace aslab
