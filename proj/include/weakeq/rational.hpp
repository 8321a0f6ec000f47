#pragma once

#include <gmpxx.h>

#include <string>

#include "weakeq/errors.hpp"

namespace weakeq {

/// Exact rational scalar. All measures, weights and moment entries are exact;
/// floating point appears only in distance computations.
using Rat = mpq_class;

/// Canonicalized copy. GMP rational arithmetic assumes canonical operands,
/// so every public entry point canonicalizes the rationals it receives.
inline Rat canonical(Rat r) {
    r.canonicalize();
    return r;
}

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// reduce the fraction itself).
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p/q" or "p". Throws input_error on malformed text or zero denominator.
Rat rat_from_string(const std::string& text);

/// Render canonical "p/q" (or "p" when the denominator is 1).
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

} // namespace weakeq
