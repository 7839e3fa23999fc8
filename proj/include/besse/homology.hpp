#pragma once

#include "besse/exact.hpp"
#include "besse/seifert.hpp"

#include <array>
#include <string>
#include <vector>

namespace besse {

// Cellular model of the Seifert fibration built from a b = 0 datum with
// K = k+1 pairs: a 0-cell; 1-cells {mu_1..mu_K, lambda, sigma_1, tau_1, ...};
// 2-cells {C_1..C_K, M_1..M_K, B, S_1, T_1, ...}; 3-cells {D_1..D_K, e3}.
// C_j is attached along alpha_j*mu_j + beta_j*lambda, D_j fills the torus
// M_j, and e3 glues along -sum M_j.
struct CWComplexData {
    SeifertData source;  // b = 0 form actually used
    std::vector<std::string> cells1;
    std::vector<std::string> cells2;
    std::vector<std::string> cells3;
    IntMatrix boundary2;  // #1-cells x #2-cells
    IntMatrix boundary3;  // #2-cells x #3-cells
};

CWComplexData chain_complex(const SeifertData& d);

enum class Coefficients { Integers, Mod2 };

struct HomologyGroups {
    Coefficients coeff = Coefficients::Integers;
    std::array<int, 4> free_rank{};              // per degree 0..3
    std::array<std::vector<Int>, 4> torsion{};   // divisibility-chained, empty over Z/2Z
};

HomologyGroups homology_groups(const CWComplexData& c, Coefficients coeff);

// H^2(M) = Z^{2g} + Z^{k+2}/im A_M with the (k+2)x(k+2) relation matrix
//   A_M = [diag(alpha_1..alpha_{k+1}) | beta column; -1 row | 0].
struct H2Presentation {
    IntMatrix a_m;
    int free_rank = 0;
    std::vector<Int> torsion;
};

H2Presentation h2_presentation(const SeifertData& d);

// A_M of the b = 0 form of d.
IntMatrix relation_matrix(const SeifertData& d);

// A_M of a b = 0 datum as given, without renormalizing (the pair order and
// the fold of b are part of the presentation). Requires b = 0 and at least
// one pair.
IntMatrix relation_matrix_b0(const SeifertData& b0);

// Mod-2 Betti numbers (rank H_0 .. rank H_3), used by the E1 page.
std::array<int, 4> mod2_betti(const SeifertData& d);

}  // namespace besse
