#include "ei/poly.hpp"

#include <algorithm>

namespace ei {

void IntegerPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::from_ints(const std::vector<long long>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long long x : coeffs) c.emplace_back(static_cast<long>(x));
    return IntegerPolynomial(std::move(c));
}

mpz_class IntegerPolynomial::at_one() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntegerPolynomial();
    std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::times_one_minus_lambda(int k) const {
    if (k < 0) throw InvalidParameter("negative power of (1-λ)");
    IntegerPolynomial r = *this;
    for (int t = 0; t < k; ++t) {
        std::vector<mpz_class> c(r.c_.size() + 1, 0);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            c[i] += r.c_[i];
            c[i + 1] -= r.c_[i];
        }
        r = IntegerPolynomial(std::move(c));
    }
    return r;
}

IntegerPolynomial IntegerPolynomial::divide_one_minus_lambda() const {
    if (at_one() != 0)
        throw InvalidParameter("polynomial not divisible by (1-λ)");
    if (is_zero()) return IntegerPolynomial();
    // synthetic division: p(λ) = (1-λ) q(λ), q_i = p_0 + p_1 + ... + p_i
    std::vector<mpz_class> q(c_.size() - 1, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        acc += c_[i];
        q[i] = acc;
    }
    return IntegerPolynomial(std::move(q));
}

std::vector<long long> IntegerPolynomial::to_ints() const {
    std::vector<long long> out;
    out.reserve(c_.size());
    for (const auto& x : c_) {
        if (!x.fits_slong_p())
            throw CapacityExceeded("coefficient does not fit a machine integer");
        out.push_back(x.get_si());
    }
    return out;
}

std::string IntegerPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (s.empty()) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool coeff_one = (a == 1);
        if (i == 0 || !coeff_one) s += a.get_str();
        if (i >= 1) s += "λ";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

} // namespace ei
