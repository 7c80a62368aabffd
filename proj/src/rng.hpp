#pragma once

#include <cstdint>
#include <random>

namespace tritorus {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded generator with independent substreams: stream k of seed s is
// mt19937_64 keyed by splitmix64 mixing of (s, k). Same (seed, stream)
// always yields the same sequence.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t st = seed;
        (void)splitmix64(st);
        st ^= 0xd2b74407b1ce6e93ULL * (stream + 1);
        engine_.seed(splitmix64(st));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace tritorus
