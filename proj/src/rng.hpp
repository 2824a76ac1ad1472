#pragma once

#include "functional.hpp"

#include <cstdint>

namespace lenard {

// SplitMix64. Deterministic across platforms so seeded reports are bit-stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }

private:
    std::uint64_t state_;
};

// Random density with the profile used by the seeded property checks: a few
// terms, total degree <= 3, jet order <= 2, small integer coefficients, every
// term carrying at least one jet factor.
inline DiffPoly random_density(Rng& rng, int comps, int max_terms = 4) {
    DiffPoly out(comps);
    int terms = rng.uniform(2, max_terms);
    for (int t = 0; t < terms; ++t) {
        int factors = rng.uniform(1, 3);
        DiffPoly mono = DiffPoly::constant(comps, Rat(rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1)));
        for (int f = 0; f < factors; ++f)
            mono = mono * DiffPoly::jet(comps, rng.uniform(0, comps - 1), rng.uniform(0, 2));
        out += mono;
    }
    if (out.is_zero()) out += DiffPoly::jet(comps, 0, 0);
    return out;
}

inline Functional random_functional(Rng& rng, int comps, int max_terms = 4) {
    return Functional(random_density(rng, comps, max_terms));
}

}  // namespace lenard
