#include "besse/rs_index.hpp"

#include "besse/chern.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace besse;

TEST_CASE("rotation index on pinned values") {
    CHECK(rs_index_rotation(Rational(0)) == 0);
    CHECK(rs_index_rotation(Rational(5, 2)) == 5);
    CHECK(rs_index_rotation(Rational(-5, 2)) == -5);
    CHECK(rs_index_rotation(Rational(1)) == 2);
    CHECK(rs_index_rotation(Rational(-3)) == -6);
    CHECK(rs_index_rotation(Rational(1, 5)) == 1);
    CHECK(rs_index_rotation(Rational(-1, 5)) == -1);
}

TEST_CASE("rotation index matches the crossing-count oracle") {
    testing::DataGen gen(67);
    for (int i = 0; i < 200; ++i) {
        Rational t = gen.rational(10, 24);
        CHECK(rs_index_rotation(t) == testing::rs_crossing_oracle(t));
    }
}

TEST_CASE("rotation index is antisymmetric and shifts by 2 per full turn") {
    testing::DataGen gen(71);
    for (int i = 0; i < 300; ++i) {
        Rational t = gen.rational(40, 24);
        CHECK(rs_index_rotation(t) + rs_index_rotation(-t) == 0);
        CHECK(rs_index_rotation(t + 1) == rs_index_rotation(t) + 2);
    }
}

TEST_CASE("orbit indices on pinned data") {
    SeifertData g2 = parse_seifert("(0,2;(2,1))");
    CHECK(rs_index(g2, OrbitId::principal(1)) == -10);
    CHECK(rs_index(g2, OrbitId::exceptional(0, 1)) == -5);
    CHECK(grading(g2, OrbitId::principal(1)) == 12);
    CHECK(grading(g2, OrbitId::exceptional(0, 1)) == 5);

    SeifertData e8 = ade_link('E', 8);
    CHECK(rs_index(e8, OrbitId::exceptional(2, 1)) == 1);  // pair (5,1), chi/e = 1

    SeifertData hopf = parse_seifert("(1,0)");
    CHECK(rs_index(hopf, OrbitId::principal(1)) == 4);
    CHECK(grading(hopf, OrbitId::principal(1)) == -2);
}

TEST_CASE("chi = 0 data has vanishing indices") {
    // Zoll over the torus: constant rotation paths, every index zero.
    SeifertData torus = parse_seifert("(1,1)");
    CHECK(rs_index(torus, OrbitId::principal(1)) == 0);
    CHECK(rs_index(torus, OrbitId::principal(7)) == 0);
    CHECK(grading(torus, OrbitId::principal(1)) == 2);
}

TEST_CASE("orbit index errors") {
    CHECK_THROWS_AS(rs_index(parse_seifert("(1,0;(3,2))"), OrbitId::principal(1)),
                    std::domain_error);  // c1 not trivial
    CHECK_THROWS_AS(rs_index(parse_seifert("(1,0)"), OrbitId::exceptional(0, 1)),
                    std::domain_error);  // pairless
    CHECK_THROWS_AS(rs_index(parse_seifert("(1,0)"), OrbitId::principal(0)), std::domain_error);
}

TEST_CASE("principal index is linear, exceptional index brackets the rotation") {
    testing::DataGen gen(73);
    int examined = 0;
    for (int i = 0; i < 3000 && examined < 50; ++i) {
        SeifertData d = gen.normalized_nonzero_e();
        ChernReport r = c1_trivial_criterion(d);
        if (!r.trivial || r.chi_over_e == 0) continue;
        ++examined;
        std::int64_t n = to_int64(integer_value(r.chi_over_e));
        std::int64_t base = rs_index(d, OrbitId::principal(1));
        CHECK(base == 2 * n);
        for (std::int64_t m = 2; m <= 4; ++m)
            CHECK(rs_index(d, OrbitId::principal(m)) == m * base);
        for (int j = 0; j < static_cast<int>(d.pairs.size()); ++j) {
            std::int64_t alpha = d.pairs[j].alpha;
            for (std::int64_t m = 1; m <= 2 * alpha; ++m) {
                std::int64_t mu = rs_index(d, OrbitId::exceptional(j, m));
                Rational rotation(m * Int(n), alpha);
                CHECK(abs(Rational(mu) - 2 * rotation) <= 1);
            }
            // A full turn around the exceptional fiber is the principal orbit.
            CHECK(rs_index(d, OrbitId::exceptional(j, alpha)) == base);
        }
    }
    CHECK(examined == 50);
}
