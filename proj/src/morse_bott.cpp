#include "besse/morse_bott.hpp"

#include "besse/chern.hpp"
#include "besse/homology.hpp"
#include "besse/rs_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace besse {

namespace {

struct SpectrumContext {
    SeifertData norm;
    std::int64_t n = 0;  // chi/e
    std::int64_t lcm = 1;
    std::vector<int> manifold_ranks;
};

SpectrumContext spectrum_context(const SeifertData& d) {
    SpectrumContext ctx;
    Rational e = euler_number(d);
    if (e <= 0) throw std::domain_error("orbit spectrum requires e > 0; got e = " + to_string(e));
    ChernReport report = chern_report(d);
    if (!report.trivial)
        throw std::domain_error("orbit spectrum undefined: c1 of " + render(d) + " is not trivial");
    ctx.n = to_int64(integer_value(report.chi_over_e));
    if (ctx.n == 0)
        throw std::domain_error("chi = 0 is degenerate: every index vanishes");
    ctx.norm = normalize(d);
    for (const auto& [alpha, beta] : ctx.norm.pairs) ctx.lcm = std::lcm(ctx.lcm, alpha);
    auto betti = mod2_betti(ctx.norm);
    ctx.manifold_ranks.assign(betti.begin(), betti.end());
    return ctx;
}

std::vector<MorseBottStratum> strata_at(const SpectrumContext& ctx, int p) {
    std::vector<MorseBottStratum> out;
    if (p % ctx.lcm == 0) {
        MorseBottStratum full;
        full.p = p;
        full.kind = MorseBottStratum::Kind::FullManifold;
        full.multiplicity = p / ctx.lcm;
        full.s = 2 * full.multiplicity * ctx.n - 1;  // principal index minus dim(M/S^1)/2
        full.homology_ranks = ctx.manifold_ranks;
        out.push_back(std::move(full));
        return out;
    }
    for (int j = 0; j < static_cast<int>(ctx.norm.pairs.size()); ++j) {
        const std::int64_t alpha = ctx.norm.pairs[j].alpha;
        const std::int64_t n_j = ctx.lcm / alpha;
        if (p % n_j != 0) continue;
        MorseBottStratum circle;
        circle.p = p;
        circle.kind = MorseBottStratum::Kind::ExceptionalCircle;
        circle.pair_index = j;
        circle.multiplicity = p / n_j;
        circle.s = rs_index_rotation(Rational(circle.multiplicity * Int(ctx.n), alpha));
        circle.homology_ranks = {1, 1};
        out.push_back(std::move(circle));
    }
    return out;
}

}  // namespace

std::vector<MorseBottStratum> orbit_spectrum(const SeifertData& d, int p_max) {
    SpectrumContext ctx = spectrum_context(d);
    std::vector<MorseBottStratum> out;
    for (int p = 1; p <= p_max; ++p)
        for (auto& stratum : strata_at(ctx, p)) out.push_back(std::move(stratum));
    return out;
}

E1Page e1_page(const SeifertData& d, int p_max) {
    SpectrumContext ctx = spectrum_context(d);
    E1Page page;
    page.data = ctx.norm;
    page.p_max = p_max;
    page.chi_over_e = ctx.n;
    page.period_lcm = ctx.lcm;
    for (int p = 1; p <= p_max; ++p)
        for (const auto& stratum : strata_at(ctx, p))
            for (std::size_t i = 0; i < stratum.homology_ranks.size(); ++i) {
                if (stratum.homology_ranks[i] == 0) continue;
                const std::int64_t q = stratum.s + static_cast<std::int64_t>(i) - p;
                page.entries[{p, q}] += stratum.homology_ranks[i];
            }
    return page;
}

namespace {

// Total degrees of potential generators in column p (including columns
// beyond the computed window).
std::set<std::int64_t> column_degrees(const SpectrumContext& ctx, int p) {
    std::set<std::int64_t> degrees;
    for (const auto& stratum : strata_at(ctx, p))
        for (std::size_t i = 0; i < stratum.homology_ranks.size(); ++i)
            if (stratum.homology_ranks[i] != 0) degrees.insert(stratum.s + static_cast<std::int64_t>(i));
    return degrees;
}

}  // namespace

SHResult lacunarity_check(const E1Page& page) {
    SHResult result;
    result.lacunary = true;
    if (page.entries.empty()) {
        result.stable_min = 0;
        result.stable_max = -1;
        return result;
    }

    // In-window differentials: nonzero source (p,q) and target (p-r, q+r-1)
    // are exactly pairs whose total degrees differ by one, filtration dropping.
    for (const auto& [from, rank_from] : page.entries) {
        for (const auto& [to, rank_to] : page.entries) {
            if (to.first >= from.first) continue;
            if (to.first + to.second != from.first + from.second - 1) continue;
            result.potential_differentials.push_back({from, to, from.first - to.first});
            result.lacunary = false;
        }
    }

    std::int64_t min_deg = 0, max_deg = 0;
    bool first = true;
    for (const auto& [pq, rank] : page.entries) {
        std::int64_t total = pq.first + pq.second;
        min_deg = first ? total : std::min(min_deg, total);
        max_deg = first ? total : std::max(max_deg, total);
        first = false;
    }

    // Columns beyond p_max could still feed differentials into the window.
    // Their degrees drift monotonically (by roughly 2*chi/e per lcm levels),
    // so only finitely many columns can reach [min_deg+1, max_deg+1].
    SpectrumContext ctx = spectrum_context(page.data);
    const std::int64_t n = ctx.n;
    const std::int64_t lcm = ctx.lcm;
    std::set<std::int64_t> beyond;
    for (int p = page.p_max + 1;; ++p) {
        const Rational t(2 * p * Int(n), lcm);
        if (n < 0 && t + 4 < min_deg + 1) break;  // upper degree bound below reach
        if (n > 0 && t - 4 > max_deg + 1) break;  // lower degree bound above reach
        for (std::int64_t deg : column_degrees(ctx, p)) beyond.insert(deg);
    }
    for (const auto& [pq, rank] : page.entries) {
        if (beyond.count(pq.first + pq.second + 1)) {
            result.window_incomplete = true;
            break;
        }
    }

    // Degrees out of reach of beyond-window columns.
    result.stable_min = min_deg;
    result.stable_max = max_deg;
    if (!beyond.empty()) {
        if (n < 0)
            result.stable_min = std::max(result.stable_min, *beyond.rbegin() + 1);
        else
            result.stable_max = std::min(result.stable_max, *beyond.begin() - 1);
    }
    return result;
}

SHResult sh_ranks(const E1Page& page) {
    SHResult result = lacunarity_check(page);
    if (!result.lacunary)
        throw std::domain_error("E1 page admits potential differentials: SH is not determined by it");
    for (const auto& [pq, rank] : page.entries) result.ranks[pq.first + pq.second] += rank;
    if (page.entries.empty()) return result;

    auto rank_at = [&](std::int64_t deg) {
        auto it = result.ranks.find(deg);
        return it == result.ranks.end() ? 0 : it->second;
    };
    const std::int64_t span = 2 * std::abs(page.chi_over_e);
    for (std::int64_t delta = 1; delta <= span; ++delta) {
        bool matches = true;
        bool nonzero_seen = false;
        for (std::int64_t deg = result.stable_min + delta; deg <= result.stable_max; ++deg) {
            if (rank_at(deg) != rank_at(deg - delta)) {
                matches = false;
                break;
            }
            if (rank_at(deg) != 0) nonzero_seen = true;
        }
        if (matches && nonzero_seen) {
            result.detected_period = delta;
            break;
        }
    }
    return result;
}

}  // namespace besse
