#include "besse/rational.hpp"

#include <stdexcept>

namespace besse {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Int integer_value(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational " + to_string(q) + " is not an integer");
    return numerator(q);
}

std::int64_t to_int64(const Int& v) {
    return v.convert_to<std::int64_t>();
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

}  // namespace besse
