#ifndef CNET_RNG_HPP
#define CNET_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>

namespace cnet {

// Derives an independent seed from (base, index) with the splitmix64
// finalizer. Used for per-replica RNG streams: the derivation is a pure
// hash, so replicas can run in any order (or in parallel) and still see
// the same seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seedable generator with portable helper draws.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// C++ standard for a given seed. The bounded-int and unit-interval
// helpers below are implemented here rather than with std::*_distribution
// because the standard leaves distribution algorithms unspecified; with
// these helpers a (seed, call sequence) pair produces identical draws on
// every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound >= 1);
        const std::uint64_t limit = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x = next();
        while (x < limit) x = next();
        return x % bound;
    }

    // Uniform double in [0, 1), 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // True with probability p.
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace cnet

#endif
