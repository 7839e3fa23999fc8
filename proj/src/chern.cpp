#include "besse/chern.hpp"

#include "besse/homology.hpp"

namespace besse {

std::vector<Int> c1_vector_b0(const SeifertData& b0) {
    if (b0.b != 0 || b0.pairs.empty())
        throw std::invalid_argument("c1 vector needs a b = 0 datum with pairs");
    const int K = static_cast<int>(b0.pairs.size());
    std::vector<Int> v(K + 1);
    for (int j = 0; j + 1 < K; ++j) v[j] = b0.pairs[j].alpha - 1;
    // The last surgery site sees the genus through the trivialization change.
    v[K - 1] = (2 * Int(b0.genus) - 1) * b0.pairs[K - 1].alpha - 1;
    v[K] = 0;
    return v;
}

std::vector<Int> c1_vector(const SeifertData& d) {
    return c1_vector_b0(b0_form(d));
}

ChernReport c1_trivial_criterion(const SeifertData& d) {
    ChernReport r;
    r.c1 = c1_vector(d);
    r.chi_over_e = chi_over_e(d);
    r.integer_flag = is_integer(r.chi_over_e);
    bool all = r.integer_flag;
    for (const auto& [alpha, beta] : normalize(d).pairs) {
        Rational q = (beta * r.chi_over_e - 1) / alpha;
        r.divisibility.push_back(is_integer(q));
        all = all && r.divisibility.back();
    }
    r.trivial = all;
    return r;
}

ChernReport c1_trivial_lattice(const SeifertData& d) {
    ChernReport r;
    r.c1 = c1_vector(d);
    r.chi_over_e = chi_over_e(d);
    r.integer_flag = is_integer(r.chi_over_e);
    r.lattice_witness = solve_integer(relation_matrix(d), r.c1);
    r.trivial = r.lattice_witness.has_value();
    return r;
}

ChernReport chern_report(const SeifertData& d) {
    ChernReport r = c1_trivial_criterion(d);
    ChernReport lattice = c1_trivial_lattice(d);
    if (r.trivial != lattice.trivial)
        throw std::logic_error("c1 triviality tests disagree on " + render(d));
    r.lattice_witness = std::move(lattice.lattice_witness);
    return r;
}

TrivializationLedger trivialization_data(const SeifertData& d) {
    ChernReport report = chern_report(d);
    if (!report.trivial)
        throw std::domain_error("trivialization undefined: c1 of " + render(d) + " is not trivial");
    const Int n = integer_value(report.chi_over_e);

    TrivializationLedger ledger;
    ledger.b_corr = to_int64(-n);
    for (const auto& [alpha, beta] : normalize(d).pairs) {
        PairCorrection corr;
        corr.alpha = alpha;
        corr.beta = beta;
        // a_j = (1 - 1/alpha) + (beta/alpha)(chi/e); integral by criterion (ii).
        corr.a = to_int64((Int(alpha) - 1 + beta * n) / alpha);
        GluingMatrix glue = gluing_matrix(alpha, beta);
        corr.p = glue.p;
        corr.q = glue.q;
        corr.d_rotation = to_int64((glue.p + n) / alpha);
        ledger.pairs.push_back(corr);
    }
    return ledger;
}

}  // namespace besse
