#ifndef SEIRDV_RNG_HPP
#define SEIRDV_RNG_HPP

#include <cstdint>
#include <random>

namespace seirdv {

/// Deterministic random source for the sampler and the predictive draws.
///
/// All variates are generated from the raw 64-bit output of a seeded
/// mt19937_64 through fully specified transformations, so a given seed
/// reproduces the same stream on every platform; the standard library
/// distribution objects (whose algorithms are implementation-defined)
/// are deliberately not used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform draw in the open interval (0, 1).
    double uniform01() {
        // 53 random mantissa bits; +0.5 ulp offset keeps the draw away from 0.
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one of the pair is discarded).
    double gaussian();

    /// Poisson variate with the given mean (>= 0).
    /// Inversion by sequential search for small means, Hormann's PTRD
    /// transformed-rejection for large ones.
    long long poisson(double mean);

    /// Derives an independent stream seed from a base seed, splitmix64-style.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    long long poisson_ptrd(double mean);
    std::mt19937_64 gen_;
};

} // namespace seirdv

#endif
