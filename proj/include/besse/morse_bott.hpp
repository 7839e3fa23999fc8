#pragma once

#include "besse/seifert.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace besse {

// One Morse-Bott family of closed Reeb orbits at filtration level p (period
// p*T0 with T0 = T/lcm(alpha_j)): the full manifold when every orbit closes
// up, or a single exceptional circle. s = mu_RS - dim(B/S^1)/2.
struct MorseBottStratum {
    enum class Kind { FullManifold, ExceptionalCircle };

    int p = 1;
    Kind kind = Kind::FullManifold;
    int pair_index = 0;  // for circles: index into the normalized pair list
    std::int64_t multiplicity = 1;
    std::int64_t s = 0;
    std::vector<int> homology_ranks;  // (1,1) for a circle, mod-2 Betti of M otherwise
};

// Strata for 1 <= p <= p_max. Requires trivial c1, e > 0 and chi != 0.
std::vector<MorseBottStratum> orbit_spectrum(const SeifertData& d, int p_max);

struct E1Page {
    SeifertData data;
    int p_max = 0;
    std::int64_t chi_over_e = 0;
    std::int64_t period_lcm = 1;                       // lcm of the alpha_j
    std::map<std::pair<int, std::int64_t>, int> entries;  // (p, q) -> rank
};

// E1_{p,q} = sum over strata B at level p of rank H_{p+q-s(B)}(B; Z/2Z).
E1Page e1_page(const SeifertData& d, int p_max);

struct DifferentialPair {
    std::pair<int, std::int64_t> from;
    std::pair<int, std::int64_t> to;
    int r = 1;
};

struct SHResult {
    std::map<std::int64_t, int> ranks;  // total degree -> rank
    bool lacunary = false;
    bool window_incomplete = false;
    std::vector<DifferentialPair> potential_differentials;
    std::optional<std::int64_t> detected_period;
    // Degrees whose anti-diagonal sums cannot receive contributions from
    // columns beyond p_max.
    std::int64_t stable_min = 0;
    std::int64_t stable_max = -1;
};

// Flags only: scans every pair of nonzero entries for d^r: (p,q) ->
// (p-r, q+r-1), and reports window incompleteness when a column beyond
// p_max could map onto an entry of the page.
SHResult lacunarity_check(const E1Page& page);

// Anti-diagonal sums plus periodicity detection. Throws std::domain_error
// when the page admits a potential differential (SH is then not determined
// by the E1 page alone).
SHResult sh_ranks(const E1Page& page);

}  // namespace besse
