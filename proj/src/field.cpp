#include "ei/field.hpp"

namespace ei {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!is_prime(p))
        throw InvalidParameter("not a prime: " + std::to_string(p));
    if (p > (std::int64_t{1} << 30))
        throw InvalidParameter("prime too large: " + std::to_string(p));
    FieldSpec f;
    f.rational = false;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "f2" || text == "F2") return prime(2);
    if (text.rfind("fp:", 0) == 0) {
        try {
            return prime(std::stoll(text.substr(3)));
        } catch (const std::invalid_argument&) {
            throw InvalidParameter("bad field spec: " + text);
        }
    }
    throw InvalidParameter("bad field spec: " + text + " (expected q, f2, or fp:<p>)");
}

std::string FieldSpec::to_string() const {
    if (rational) return "q";
    if (p == 2) return "f2";
    return "fp:" + std::to_string(p);
}

} // namespace ei
