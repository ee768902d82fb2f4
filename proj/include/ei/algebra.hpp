#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ei/complex.hpp"
#include "ei/field.hpp"
#include "ei/homology.hpp"
#include "ei/poly.hpp"

namespace ei {

// Hilbert series numerator/(1-λ)^dpow. Series produced here are kept in
// lowest terms: numerator(1) != 0.
struct HilbertSeries {
    IntegerPolynomial numerator;
    int dpow = 0;

    bool operator==(const HilbertSeries& o) const {
        return dpow == o.dpow && numerator == o.numerator;
    }
};

// Squarefree monomial ideal, generators stored as an inclusion antichain of
// support masks, sorted. The zero ideal has no generators.
struct SquarefreeMonomialIdeal {
    int ambient = 0;
    std::vector<Vmask> generators;

    // Minimalizes to an antichain; throws IdealImproper on an empty support.
    static SquarefreeMonomialIdeal make(int ambient, std::vector<Vmask> gens);
    bool is_zero() const { return generators.empty(); }
};

struct BettiTable {
    // (homological index i, internal degree j) -> β_{i,j}(R/I); only i >= 1
    // entries are recorded.
    std::map<std::pair<int, int>, long long> entries;
};

struct HPolynomial {
    IntegerPolynomial coeffs;
    int degree = 0; // s, with h_s != 0
};

HilbertSeries hilbert_series_of_complex(const SimplicialComplex& k);
HPolynomial h_polynomial(const HilbertSeries& h);
std::vector<mpz_class> series_expansion(const HilbertSeries& h, int max_degree);

SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal);
HilbertSeries hilbert_series_of_ideal(const SquarefreeMonomialIdeal& ideal);

SquarefreeMonomialIdeal colon_by_variable(const SquarefreeMonomialIdeal& ideal, int v);
SquarefreeMonomialIdeal add_variable(const SquarefreeMonomialIdeal& ideal, int v);

BettiTable graded_betti(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field);
int regularity_quotient(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field);
inline int regularity_ideal(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field) {
    return regularity_quotient(ideal, field) + 1;
}

struct AdditivityReport {
    bool hilbert_ok = false;   // H_{R/I} = H_{R/(I+(v))} + λ H_{R/(I:(v))}
    bool regularity_ok = false; // reg(I) = reg(I:(v)) + 1 or reg(I) = reg(I+(v))
    int reg_ideal = 0;
    int reg_colon = 0;
    int reg_added = 0;
    bool ok() const { return hilbert_ok && regularity_ok; }
};

AdditivityReport check_colon_sum_additivity(const SquarefreeMonomialIdeal& ideal, int v,
                                            const FieldSpec& field);

} // namespace ei
