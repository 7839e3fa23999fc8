#pragma once

#include "besse/exact.hpp"
#include "besse/seifert.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace besse {

// Obstruction-theory representative of c1 and the two triviality tests.
// The closed-form test checks chi/e in Z and alpha_j | (beta_j*chi/e - 1)
// per pair; the lattice test solves A_M x = c1 over the integers. They are
// equivalent; chern_report() runs both and insists they agree.
struct ChernReport {
    std::vector<Int> c1;        // length k+2, last entry 0 (b = 0 form)
    Rational chi_over_e;        // exact
    bool integer_flag = false;  // chi/e in Z
    std::vector<bool> divisibility;  // per normalized pair
    bool trivial = false;
    std::optional<std::vector<Int>> lattice_witness;  // x with A_M x = c1
};

// (alpha_1 - 1, ..., alpha_k - 1, (2g-1)alpha_{k+1} - 1, 0) of the b = 0 form.
std::vector<Int> c1_vector(const SeifertData& d);

// Same, for a b = 0 datum as given (no renormalization; the last pair as
// presented plays the special role).
std::vector<Int> c1_vector_b0(const SeifertData& b0);

// Closed-form test only (witness left empty). Throws std::domain_error when e = 0.
ChernReport c1_trivial_criterion(const SeifertData& d);

// Lattice test only (divisibility flags left empty). Throws when e = 0.
ChernReport c1_trivial_lattice(const SeifertData& d);

// Both tests; throws std::logic_error if they ever disagree.
ChernReport chern_report(const SeifertData& d);

// Rotation corrections pinning down the global trivialization used by the
// index computation. Defined only for c1 = 0 data; every entry is an integer.
struct PairCorrection {
    std::int64_t alpha = 1;
    std::int64_t beta = 0;
    std::int64_t a = 0;           // meridian rotation correction
    std::int64_t p = 0;           // alpha*q - beta*p = 1, 0 <= p < alpha
    std::int64_t q = 1;
    std::int64_t d_rotation = 0;  // (p + chi/e)/alpha, rotation fixing D_j
};

struct TrivializationLedger {
    std::int64_t b_corr = 0;  // fiberwise correction, -chi/e
    std::vector<PairCorrection> pairs;
};

// Throws std::domain_error when c1 is not trivial.
TrivializationLedger trivialization_data(const SeifertData& d);

}  // namespace besse
