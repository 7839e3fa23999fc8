#pragma once

#include "besse/seifert.hpp"

#include <cstdint>

namespace besse {

// A closed Reeb orbit of the Besse flow: either an m-fold cover of a
// principal orbit, or of the exceptional orbit at pair j (0-based index
// into the normalized pair list).
struct OrbitId {
    enum class Kind { Principal, Exceptional };

    Kind kind = Kind::Principal;
    int pair_index = 0;
    std::int64_t multiplicity = 1;

    static OrbitId principal(std::int64_t m) { return {Kind::Principal, 0, m}; }
    static OrbitId exceptional(int j, std::int64_t m) { return {Kind::Exceptional, j, m}; }
};

// Robbin-Salamon index of the path t -> R(2*pi*T*t) of rotations:
// 2*floor(T)+1 for positive non-integer T, -2*floor(-T)-1 for negative
// non-integer T, 2T for integer T.
std::int64_t rs_index_rotation(const Rational& t);

// Index of a closed Reeb orbit in the canonical trivialization:
// 2m*chi/e for principal orbits, rs_index_rotation((m/alpha_j)*chi/e) for
// exceptional ones. Requires trivial c1; throws std::domain_error otherwise
// or when an exceptional orbit is requested on pairless data.
std::int64_t rs_index(const SeifertData& d, const OrbitId& orbit);

// Grading of the generator: 2 - rs_index for principal orbits, -rs_index
// for exceptional ones (the convention matching the E1 chart).
std::int64_t grading(const SeifertData& d, const OrbitId& orbit);

}  // namespace besse
