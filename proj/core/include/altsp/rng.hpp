#ifndef ALTSP_RNG_HPP
#define ALTSP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "altsp/special.hpp"

namespace altsp {

/// splitmix64 mix step, also used for stable hashing.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded random source with portable real-valued draws. All variates
/// are derived from raw 64-bit outputs by fixed arithmetic (inverse-cdf
/// transforms), so a given seed reproduces the same values on every
/// platform. Not thread-safe; use one instance per logical stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent stream for (seed, index), e.g. one per replication
    /// or restart.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(splitmix64(seed) + index));
    }

    std::uint64_t raw() { return gen_(); }

    /// Uniform draw on the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal draw via the inverse cdf.
    double normal() { return normal_quantile(uniform()); }

    /// Standard extreme-value draw, z = ln(-ln U).
    double sev() { return std::log(-std::log(uniform())); }

private:
    std::mt19937_64 gen_;
};

}  // namespace altsp

#endif  // ALTSP_RNG_HPP
