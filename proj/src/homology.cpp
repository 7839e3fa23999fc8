#include "besse/homology.hpp"

namespace besse {

CWComplexData chain_complex(const SeifertData& d) {
    CWComplexData c;
    c.source = b0_form(d);
    const auto& pairs = c.source.pairs;
    const int K = static_cast<int>(pairs.size());
    const int g = static_cast<int>(c.source.genus);

    for (int j = 1; j <= K; ++j) c.cells1.push_back("mu" + std::to_string(j));
    c.cells1.push_back("lambda");
    for (int l = 1; l <= g; ++l) {
        c.cells1.push_back("sigma" + std::to_string(l));
        c.cells1.push_back("tau" + std::to_string(l));
    }
    for (int j = 1; j <= K; ++j) c.cells2.push_back("C" + std::to_string(j));
    for (int j = 1; j <= K; ++j) c.cells2.push_back("M" + std::to_string(j));
    c.cells2.push_back("B");
    for (int l = 1; l <= g; ++l) {
        c.cells2.push_back("S" + std::to_string(l));
        c.cells2.push_back("T" + std::to_string(l));
    }
    for (int j = 1; j <= K; ++j) c.cells3.push_back("D" + std::to_string(j));
    c.cells3.push_back("e3");

    const int n1 = static_cast<int>(c.cells1.size());
    const int n2 = static_cast<int>(c.cells2.size());
    const int n3 = static_cast<int>(c.cells3.size());

    c.boundary2 = IntMatrix(n1, n2);
    for (int j = 0; j < K; ++j) {
        c.boundary2.at(j, j) = pairs[j].alpha;  // C_j wraps mu_j alpha times
        c.boundary2.at(K, j) = pairs[j].beta;   // and lambda beta times
    }
    const int col_b = 2 * K;  // column of B
    for (int j = 0; j < K; ++j) c.boundary2.at(j, col_b) = -1;
    // M_j, S_l, T_l are tori (products of loops): zero boundary.

    c.boundary3 = IntMatrix(n2, n3);
    for (int j = 0; j < K; ++j) {
        c.boundary3.at(K + j, j) = 1;    // D_j fills M_j
        c.boundary3.at(K + j, K) = -1;   // e3 runs over every M_j once
    }
    return c;
}

namespace {

int rank_over_z(const IntMatrix& m) {
    int rank = 0;
    for (const Int& d : smith_normal_form(m).diagonal())
        if (d != 0) ++rank;
    return rank;
}

std::vector<Int> torsion_divisors(const IntMatrix& m) {
    std::vector<Int> t;
    for (const Int& d : smith_normal_form(m).diagonal())
        if (d > 1) t.push_back(d);
    return t;
}

}  // namespace

HomologyGroups homology_groups(const CWComplexData& c, Coefficients coeff) {
    HomologyGroups h;
    h.coeff = coeff;
    const std::array<int, 4> dims = {1, c.boundary2.rows(), c.boundary2.cols(), c.boundary3.cols()};
    // boundary_1 and boundary_0 vanish: a single 0-cell, every 1-cell a loop.
    std::array<int, 4> rank_in{};   // rank of boundary_{d+1}
    std::array<int, 4> rank_out{};  // rank of boundary_d
    if (coeff == Coefficients::Mod2) {
        rank_out[2] = rank_in[1] = rank_mod2(c.boundary2);
        rank_out[3] = rank_in[2] = rank_mod2(c.boundary3);
    } else {
        rank_out[2] = rank_in[1] = rank_over_z(c.boundary2);
        rank_out[3] = rank_in[2] = rank_over_z(c.boundary3);
        h.torsion[1] = torsion_divisors(c.boundary2);
        h.torsion[2] = torsion_divisors(c.boundary3);
    }
    for (int deg = 0; deg < 4; ++deg) h.free_rank[deg] = dims[deg] - rank_out[deg] - rank_in[deg];
    return h;
}

IntMatrix relation_matrix_b0(const SeifertData& b0) {
    if (b0.b != 0 || b0.pairs.empty())
        throw std::invalid_argument("relation matrix needs a b = 0 datum with pairs");
    const int K = static_cast<int>(b0.pairs.size());
    IntMatrix a(K + 1, K + 1);
    for (int j = 0; j < K; ++j) {
        a.at(j, j) = b0.pairs[j].alpha;
        a.at(j, K) = b0.pairs[j].beta;
        a.at(K, j) = -1;
    }
    return a;
}

IntMatrix relation_matrix(const SeifertData& d) {
    return relation_matrix_b0(b0_form(d));
}

H2Presentation h2_presentation(const SeifertData& d) {
    H2Presentation p;
    p.a_m = relation_matrix(d);
    p.free_rank = 2 * static_cast<int>(normalize(d).genus);
    p.torsion = torsion_divisors(p.a_m);
    return p;
}

std::array<int, 4> mod2_betti(const SeifertData& d) {
    return homology_groups(chain_complex(d), Coefficients::Mod2).free_rank;
}

}  // namespace besse
