#include "seirdv/rng.hpp"

#include <cmath>
#include <numbers>

namespace seirdv {

double Rng::gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

long long Rng::poisson(double mean) {
    if (mean <= 0.0) {
        return 0;
    }
    if (mean < 10.0) {
        // Knuth's sequential search on the product of uniforms.
        double limit = std::exp(-mean);
        long long k = 0;
        double prod = uniform01();
        while (prod > limit) {
            ++k;
            prod *= uniform01();
        }
        return k;
    }
    return poisson_ptrd(mean);
}

// Transformed rejection with squeeze (Hormann's PTRS), exact for mean >= 10.
long long Rng::poisson_ptrd(double mean) {
    const double smu = std::sqrt(mean);
    const double log_mu = std::log(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        double u = uniform01() - 0.5;
        double v = uniform01();
        double us = 0.5 - std::fabs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<long long>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            kf * log_mu - mean - std::lgamma(kf + 1.0)) {
            return static_cast<long long>(kf);
        }
    }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace seirdv
