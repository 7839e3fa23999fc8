#include "besse/rs_index.hpp"

#include "besse/chern.hpp"

namespace besse {

std::int64_t rs_index_rotation(const Rational& t) {
    if (is_integer(t)) return 2 * to_int64(numerator(t));
    if (t > 0) return 2 * to_int64(rational_floor(t)) + 1;
    return -2 * to_int64(rational_floor(-t)) - 1;
}

namespace {

Rational orbit_rotation(const SeifertData& d, const OrbitId& orbit) {
    ChernReport report = chern_report(d);
    if (!report.trivial)
        throw std::domain_error("indices undefined: c1 of " + render(d) + " is not trivial");
    const Int n = integer_value(report.chi_over_e);
    if (orbit.multiplicity < 1) throw std::domain_error("multiplicity must be >= 1");
    if (orbit.kind == OrbitId::Kind::Principal) return Rational(orbit.multiplicity * n);
    SeifertData norm = normalize(d);
    if (orbit.pair_index < 0 || orbit.pair_index >= static_cast<int>(norm.pairs.size()))
        throw std::domain_error("no exceptional fiber with that index");
    return Rational(orbit.multiplicity * n, norm.pairs[orbit.pair_index].alpha);
}

}  // namespace

std::int64_t rs_index(const SeifertData& d, const OrbitId& orbit) {
    return rs_index_rotation(orbit_rotation(d, orbit));
}

std::int64_t grading(const SeifertData& d, const OrbitId& orbit) {
    std::int64_t mu = rs_index(d, orbit);
    return orbit.kind == OrbitId::Kind::Principal ? 2 - mu : -mu;
}

}  // namespace besse
