#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "ei/errors.hpp"

namespace ei {

// Dense integer polynomial in λ; coefficient index = degree. Normalized so the
// highest stored coefficient is nonzero (the zero polynomial stores nothing).
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntegerPolynomial from_ints(const std::vector<long long>& coeffs);
    static IntegerPolynomial one() { return from_ints({1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int d) const {
        return (d < 0 || d >= static_cast<int>(c_.size())) ? mpz_class(0) : c_[static_cast<std::size_t>(d)];
    }
    mpz_class at_one() const;

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-(const IntegerPolynomial& o) const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }

    // Multiplies by (1-λ)^k, k >= 0.
    IntegerPolynomial times_one_minus_lambda(int k) const;
    // Exact division by (1-λ); throws InvalidParameter if not divisible.
    IntegerPolynomial divide_one_minus_lambda() const;

    std::vector<long long> to_ints() const; // throws on overflow
    std::string to_string() const;          // e.g. "1 + 3λ + λ^2"

private:
    void normalize();
    std::vector<mpz_class> c_;
};

} // namespace ei
