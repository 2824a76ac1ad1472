#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lenard {

// Exact rational scalar used throughout the symbolic core.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat q(text);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// True when q is 0 or a positive integer (the excluded set for the ladder constant).
inline bool rat_in_zero_or_positive_integers(const Rat& q) {
    return rat_is_integer(q) && q >= 0;
}

inline Rat rat_pow(Rat base, unsigned exp) {
    Rat out(1);
    while (exp > 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_factorial(unsigned n) {
    Rat out(1);
    for (unsigned i = 2; i <= n; ++i) out *= Rat(static_cast<long>(i));
    return out;
}

}  // namespace lenard
