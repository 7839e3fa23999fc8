#include "besse/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace besse {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

void check_pair(std::int64_t alpha, std::int64_t beta, std::size_t pos) {
    if (alpha < 1) throw ParseError("alpha must be >= 1", pos);
    if (gcd64(alpha, beta) != 1) throw ParseError("non-coprime pair", pos);
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        return std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    }

    void end() {
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SeifertData parse_seifert(std::string_view text) {
    Cursor c(text);
    SeifertData d;
    c.expect('(');
    d.b = c.integer();
    c.expect(',');
    std::size_t genus_pos = c.pos();
    d.genus = c.integer();
    if (d.genus < 0) throw ParseError("negative genus", genus_pos);
    if (c.accept(';')) {
        while (!c.accept(')')) {
            if (!d.pairs.empty()) c.expect(',');
            c.expect('(');
            std::size_t pair_pos = c.pos();
            std::int64_t alpha = c.integer();
            c.expect(',');
            std::int64_t beta = c.integer();
            c.expect(')');
            check_pair(alpha, beta, pair_pos);
            d.pairs.push_back({alpha, beta});
        }
    } else {
        c.expect(')');
    }
    c.end();
    return d;
}

std::string render(const SeifertData& d) {
    std::string s = "(" + std::to_string(d.b) + "," + std::to_string(d.genus);
    if (!d.pairs.empty()) {
        s += ";";
        for (std::size_t j = 0; j < d.pairs.size(); ++j) {
            if (j) s += ",";
            s += "(" + std::to_string(d.pairs[j].alpha) + "," + std::to_string(d.pairs[j].beta) + ")";
        }
    }
    s += ")";
    return s;
}

SeifertData normalize(const SeifertData& d) {
    SeifertData n;
    n.genus = d.genus;
    n.b = d.b;
    for (const auto& [alpha, beta] : d.pairs) {
        if (alpha == 1) {
            // (1, m) ~ (1, 0) after shifting b by m, and (1, 0) is deleted.
            n.b += beta;
            continue;
        }
        // Shift beta into [1, alpha-1]; coprimality rules out beta = 0 mod alpha.
        std::int64_t r = beta % alpha;
        if (r < 0) r += alpha;
        n.b += (beta - r) / alpha;
        n.pairs.push_back({alpha, r});
    }
    std::sort(n.pairs.begin(), n.pairs.end());
    return n;
}

bool is_normalized(const SeifertData& d) {
    return d == normalize(d);
}

bool equivalent(const SeifertData& lhs, const SeifertData& rhs) {
    return normalize(lhs) == normalize(rhs);
}

Rational euler_number(const SeifertData& d) {
    Rational e = d.b;
    for (const auto& [alpha, beta] : d.pairs) e += Rational(beta, alpha);
    return e;
}

Rational orbifold_euler_char(const SeifertData& d) {
    Rational chi = 2 - 2 * Rational(d.genus);
    for (const auto& [alpha, beta] : d.pairs) chi -= Rational(alpha - 1, alpha);
    return chi;
}

Rational chi_over_e(const SeifertData& d) {
    Rational e = euler_number(d);
    if (e == 0) throw std::domain_error("Euler number is zero: not a Besse datum");
    return orbifold_euler_char(d) / e;
}

SeifertData reverse_orientation(const SeifertData& d) {
    SeifertData n = normalize(d);
    SeifertData r;
    r.genus = n.genus;
    r.b = -n.b - static_cast<std::int64_t>(n.pairs.size());
    for (const auto& [alpha, beta] : n.pairs) r.pairs.push_back({alpha, alpha - beta});
    return normalize(r);
}

SeifertData ade_link(char series, int index) {
    switch (series) {
        case 'A': {
            if (index < 1) throw std::out_of_range("A_l requires l >= 1");
            std::int64_t l = index;
            if (l % 2 == 1) {
                SeifertPair p{(l + 1) / 2, (l - 1) / 2};
                return {-2, 0, {p, p}};
            }
            SeifertPair p{l + 1, l / 2};
            return {-1, 0, {p, p}};
        }
        case 'D': {
            if (index < 4) throw std::out_of_range("D_l requires l >= 4");
            std::int64_t l = index;
            return {-1, 0, {{2, 1}, {2, 1}, {l - 2, 1}}};
        }
        case 'E': {
            if (index < 6 || index > 8) throw std::out_of_range("E_l requires l in {6,7,8}");
            std::int64_t last = index == 6 ? 3 : index == 7 ? 4 : 5;
            return {-1, 0, {{2, 1}, {3, 1}, {last, 1}}};
        }
        default:
            throw std::out_of_range("unknown singularity series");
    }
}

namespace {

// Least positive residue r with r*value = 1 (mod modulus); r = 1 when
// modulus = 1.
std::int64_t least_positive_inverse(std::int64_t value, std::int64_t modulus) {
    for (std::int64_t r = 1; r <= modulus; ++r) {
        if ((r * value) % modulus == ((1 % modulus) + modulus) % modulus) return r;
    }
    throw std::domain_error("value not invertible");
}

}  // namespace

SeifertData ellipsoid(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::domain_error("ellipsoid weights must be >= 1");
    if (gcd64(a, b) != 1) throw std::domain_error("ellipsoid weights must be coprime");
    std::int64_t a_star = b == 1 ? 1 : least_positive_inverse(a, b);
    std::int64_t b_star = a == 1 ? 1 : least_positive_inverse(b, a);
    std::int64_t num = 1 - a_star * a - b_star * b;
    if (num % (a * b) != 0) throw std::logic_error("ellipsoid coefficient not integral");
    SeifertData d;
    d.b = num / (a * b);
    d.genus = 0;
    // The congruences do not force coprime pairs; a common factor leaves the
    // surgery slope unchanged, so divide it out.
    for (auto [alpha, beta] : {SeifertPair{a, a_star}, SeifertPair{b, b_star}}) {
        std::int64_t g = gcd64(alpha, beta);
        d.pairs.push_back({alpha / g, beta / g});
    }
    return normalize(d);
}

GluingMatrix gluing_matrix(std::int64_t alpha, std::int64_t beta) {
    if (alpha < 1) throw std::domain_error("alpha must be >= 1");
    if (gcd64(alpha, beta) != 1) throw std::domain_error("non-coprime pair");
    GluingMatrix m;
    m.alpha = alpha;
    m.beta = beta;
    if (alpha == 1) {
        m.p = 0;
        m.q = 1;
        return m;
    }
    // Unique p in [0, alpha) with beta*p = -1 (mod alpha).
    std::int64_t beta_mod = ((beta % alpha) + alpha) % alpha;
    m.p = alpha - least_positive_inverse(beta_mod, alpha);
    m.q = (1 + beta * m.p) / alpha;
    return m;
}

SeifertData b0_form(const SeifertData& d) {
    SeifertData n = normalize(d);
    if (n.pairs.empty()) return {0, n.genus, {{1, n.b}}};
    SeifertPair& last = n.pairs.back();
    last.beta += n.b * last.alpha;
    n.b = 0;
    return n;
}

}  // namespace besse
