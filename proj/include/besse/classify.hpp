#pragma once

#include "besse/chern.hpp"
#include "besse/seifert.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace besse {

// Family a classified c1 = 0 Besse datum belongs to.
struct Family {
    enum class Kind { LensSpace, ADE, BoothbyWangTorus, NegativeChiExample, Sporadic };

    Kind kind = Kind::Sporadic;
    Int lens_p = 0;        // L(p, p-1), set for LensSpace
    char ade_series = 0;   // set for ADE
    int ade_index = 0;
    std::int64_t bundle_euler = 0;  // set for BoothbyWangTorus

    std::string to_string() const;
};

struct ClassificationResult {
    Family family;
    SeifertData data;
    ChernReport certificate;
};

// All normalized data with g = 0, at most three exceptional fibers,
// alpha_j <= max_alpha, chi > 0, e > 0 and trivial c1, in lexicographic
// order of the rendered normal form. Lens-space members carry
// p = (prod alpha_j)*e; three-fiber members are tagged by their ADE type.
std::vector<ClassificationResult> classify_positive_chi(int max_alpha);

// chi = 0 with trivial c1 forces Zoll data over a torus: (b, 1) for
// 1 <= b <= max_b.
std::vector<ClassificationResult> classify_zero_chi(int max_b);

// The family (2g-2, g; (alpha_1, alpha_1 - 1), ..., (alpha_k, alpha_k - 1)),
// which has chi/e = -1. Requires g >= 1, or g = 0 with sum 1/alpha_j < k - 2;
// verifies chi < 0 and c1 = 0 and throws std::domain_error otherwise.
ClassificationResult negative_chi_family(std::int64_t genus, std::span<const std::int64_t> alphas);

}  // namespace besse
