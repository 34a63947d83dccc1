#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hslab {

// Deterministic uniform generator.  Values are produced from the raw 64-bit
// stream directly so sequences are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int sign() { return (eng_() & 1u) ? 1 : -1; }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

// splitmix64 step; derives independent per-index seeds so that sample i of a
// run is unchanged when the total sample count grows.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace hslab
