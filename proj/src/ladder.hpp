#pragma once

#include "poisson.hpp"

#include <string>
#include <vector>

namespace lenard {

// The orbit seed and its iterated Lie derivatives: entries[i+1] is the image
// of entries[i] under the generator, stored in canonical form.
struct Ladder {
    std::string model;
    Characteristics generator;
    std::vector<Functional> entries;

    int depth() const { return static_cast<int>(entries.size()) - 1; }
};

Ladder ladder_generate(const Functional& seed, const Characteristics& generator, int depth,
                       std::string model = "custom");

// Truncated orbit sum_{i<=depth} z^i/i! * entries[i].
struct OrbitValue {
    Functional value;
    int truncation_order;
};
OrbitValue orbit_eval(const Ladder& ladder, const Rat& z);

struct PairCheck {
    int k = 0;
    int m = 0;
    bool zero = false;
    std::string residual;  // canonical density, empty when zero
};

struct InvolutivityReport {
    std::string model;
    int depth = 0;
    std::vector<PairCheck> pairs;
    bool pass = false;
};

InvolutivityReport involutivity_report(const Ladder& ladder, const PoissonOp& w);

}  // namespace lenard
