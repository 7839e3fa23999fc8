#include "besse/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace besse {

std::string Family::to_string() const {
    switch (kind) {
        case Kind::LensSpace:
            return "LensSpace(" + lens_p.str() + ")";
        case Kind::ADE:
            return std::string("ADE(") + ade_series + std::to_string(ade_index) + ")";
        case Kind::BoothbyWangTorus:
            return "BoothbyWangTorus(" + std::to_string(bundle_euler) + ")";
        case Kind::NegativeChiExample:
            return "NegativeChiExample";
        case Kind::Sporadic:
            return "Sporadic";
    }
    return "Sporadic";
}

namespace {

Family tag_positive_chi(const SeifertData& d) {
    Family f;
    const auto& pairs = d.pairs;
    if (pairs.size() <= 2) {
        f.kind = Family::Kind::LensSpace;
        Rational p = euler_number(d);
        for (const auto& [alpha, beta] : pairs) p *= alpha;
        f.lens_p = integer_value(p);
        return f;
    }
    if (pairs.size() == 3) {
        std::vector<std::int64_t> alphas = {pairs[0].alpha, pairs[1].alpha, pairs[2].alpha};
        std::sort(alphas.begin(), alphas.end());
        bool units = std::all_of(pairs.begin(), pairs.end(), [](const SeifertPair& p) { return p.beta == 1; });
        if (units && d.b == -1) {
            if (alphas[0] == 2 && alphas[1] == 2) {
                f.kind = Family::Kind::ADE;
                f.ade_series = 'D';
                f.ade_index = static_cast<int>(alphas[2] + 2);
                return f;
            }
            if (alphas[0] == 2 && alphas[1] == 3 && alphas[2] >= 3 && alphas[2] <= 5) {
                f.kind = Family::Kind::ADE;
                f.ade_series = 'E';
                f.ade_index = static_cast<int>(alphas[2] + 3);
                return f;
            }
        }
    }
    f.kind = Family::Kind::Sporadic;
    return f;
}

// All normalized coprime pairs with 2 <= alpha <= max_alpha.
std::vector<SeifertPair> normalized_pairs(int max_alpha) {
    std::vector<SeifertPair> out;
    for (std::int64_t alpha = 2; alpha <= max_alpha; ++alpha)
        for (std::int64_t beta = 1; beta < alpha; ++beta)
            if (std::gcd(alpha, beta) == 1) out.push_back({alpha, beta});
    return out;
}

}  // namespace

std::vector<ClassificationResult> classify_positive_chi(int max_alpha) {
    if (max_alpha < 2) throw std::domain_error("max_alpha must be >= 2");
    const std::vector<SeifertPair> pool = normalized_pairs(max_alpha);
    const int np = static_cast<int>(pool.size());

    // chi > 0 with e > 0 and chi/e in Z forces e <= chi <= 2, so b <= 2;
    // e > 0 with normalized pairs forces b > -k.
    std::map<std::string, ClassificationResult> found;
    std::vector<int> choice;
    auto visit = [&](const SeifertData& d) {
        if (orbifold_euler_char(d) <= 0) return;
        if (euler_number(d) <= 0) return;
        ChernReport report = chern_report(d);
        if (!report.trivial) return;
        ClassificationResult result{tag_positive_chi(d), d, std::move(report)};
        found.emplace(render(d), std::move(result));
    };
    auto enumerate = [&](auto&& self, int first, SeifertData& d) -> void {
        for (std::int64_t b = -static_cast<std::int64_t>(d.pairs.size()); b <= 2; ++b) {
            d.b = b;
            visit(d);
        }
        if (d.pairs.size() == 3) return;
        for (int i = first; i < np; ++i) {
            d.pairs.push_back(pool[i]);
            self(self, i, d);
            d.pairs.pop_back();
        }
    };
    SeifertData d;
    enumerate(enumerate, 0, d);

    std::vector<ClassificationResult> out;
    out.reserve(found.size());
    for (auto& [key, result] : found) out.push_back(std::move(result));
    return out;
}

std::vector<ClassificationResult> classify_zero_chi(int max_b) {
    if (max_b < 1) throw std::domain_error("max_b must be >= 1");
    std::vector<ClassificationResult> out;
    for (std::int64_t b = 1; b <= max_b; ++b) {
        SeifertData d{b, 1, {}};
        Family f;
        f.kind = Family::Kind::BoothbyWangTorus;
        f.bundle_euler = b;
        out.push_back({f, d, chern_report(d)});
    }
    return out;
}

ClassificationResult negative_chi_family(std::int64_t genus, std::span<const std::int64_t> alphas) {
    if (genus < 0) throw std::domain_error("genus must be >= 0");
    if (genus == 0) {
        Rational sum = 0;
        for (std::int64_t a : alphas) {
            if (a < 1) throw std::domain_error("alpha must be >= 1");
            sum += Rational(1, a);
        }
        if (sum >= Rational(static_cast<std::int64_t>(alphas.size()) - 2))
            throw std::domain_error("genus 0 requires sum 1/alpha_j < k - 2");
    }
    SeifertData d;
    d.b = 2 * genus - 2;
    d.genus = genus;
    for (std::int64_t a : alphas) {
        if (a < 1) throw std::domain_error("alpha must be >= 1");
        d.pairs.push_back({a, a - 1});
    }
    d = normalize(d);
    if (orbifold_euler_char(d) >= 0)
        throw std::domain_error("family member " + render(d) + " has chi >= 0");
    ClassificationResult result{{}, d, chern_report(d)};
    result.family.kind = Family::Kind::NegativeChiExample;
    if (!result.certificate.trivial)
        throw std::logic_error("negative-chi family member fails the c1 test");
    return result;
}

}  // namespace besse
