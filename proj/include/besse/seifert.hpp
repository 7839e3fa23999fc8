#pragma once

#include "besse/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace besse {

// Seifert invariants (b, g; (alpha_1,beta_1),...,(alpha_k,beta_k)) of a
// closed oriented Seifert fibered 3-manifold. Every pair is coprime with
// alpha >= 1; b and beta are unrestricted integers until normalization.
struct SeifertPair {
    std::int64_t alpha = 1;
    std::int64_t beta = 0;

    friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
    friend auto operator<=>(const SeifertPair&, const SeifertPair&) = default;
};

struct SeifertData {
    std::int64_t b = 0;
    std::int64_t genus = 0;
    std::vector<SeifertPair> pairs;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Parses "(b,g;(a1,b1),...,(ak,bk))". Whitespace is allowed anywhere between
// tokens; the pair list may be empty ("(b,g;)" or "(b,g)"). Does not
// normalize. Throws ParseError on syntax errors, non-coprime pairs,
// alpha < 1, or negative genus.
SeifertData parse_seifert(std::string_view text);

// Canonical rendering: "(b,g;(a1,b1),...,(ak,bk))" with no spaces, "(b,g)"
// when the pair list is empty. parse_seifert(render(d)) == d.
std::string render(const SeifertData& d);

// Canonical form: 0 < beta_j < alpha_j with all alpha = 1 pairs absorbed
// into b, pairs sorted lexicographically. Preserves e and chi.
SeifertData normalize(const SeifertData& d);

bool is_normalized(const SeifertData& d);

// True iff both data describe the same Besse manifold, i.e. their normal
// forms coincide.
bool equivalent(const SeifertData& lhs, const SeifertData& rhs);

// e = b + sum beta_j/alpha_j.
Rational euler_number(const SeifertData& d);

// chi = 2 - 2g - sum (1 - 1/alpha_j).
Rational orbifold_euler_char(const SeifertData& d);

// chi/e; throws std::domain_error when e = 0 (not a Besse datum).
Rational chi_over_e(const SeifertData& d);

// The same manifold with the opposite orientation:
// (-b-k, g; (alpha_j, alpha_j - beta_j)), normalized. Negates e exactly.
SeifertData reverse_orientation(const SeifertData& d);

// Seifert invariants of the link of a simple singularity.
// series 'A' (index >= 1), 'D' (index >= 4), 'E' (index 6, 7 or 8).
SeifertData ade_link(char series, int index);

// Seifert invariants of the ellipsoid contact form on S^3 with integer
// weights a, b (coprime): ((1 - a*a - b*b)/(ab), 0; (a,a*),(b,b*)) with
// a*, b* the least positive residues inverting a mod b and b mod a.
// Raw pairs are reduced by their gcd (equal slope) and the result is
// normalized. |e| can differ from 1/(ab); callers may warn (see README).
SeifertData ellipsoid(std::int64_t a, std::int64_t b);

// (alpha, p; beta, q) in SL(2,Z): alpha*q - beta*p = 1 with 0 <= p < alpha
// (p = 0 when alpha = 1). This is the torus gluing map of the surgery
// description; the same p_j, q_j feed the trivialization ledger.
struct GluingMatrix {
    std::int64_t alpha = 1;
    std::int64_t p = 0;
    std::int64_t beta = 0;
    std::int64_t q = 1;

    std::int64_t det() const { return alpha * q - beta * p; }
};

GluingMatrix gluing_matrix(std::int64_t alpha, std::int64_t beta);

// Equivalent data with b = 0 and at least one pair: the background
// coefficient is folded into the last pair after normalization, and a
// pairless datum (b, g) becomes (0, g; (1, b)). This is the form the CW
// model, the c1 vector and the relation matrix A_M are written in.
SeifertData b0_form(const SeifertData& d);

}  // namespace besse
