#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ei/algebra.hpp"
#include "ei/edge_ideal.hpp"

using namespace ei;

namespace {

Graph c5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

} // namespace

TEST_CASE("integer polynomial arithmetic") {
    IntegerPolynomial p = IntegerPolynomial::from_ints({1, 3, 1});
    CHECK(p.degree() == 2);
    CHECK(p.at_one() == 5);
    CHECK(p.to_string() == "1 + 3λ + λ^2");
    IntegerPolynomial q = p.times_one_minus_lambda(2);
    CHECK(q.degree() == 4);
    CHECK(q.divide_one_minus_lambda().divide_one_minus_lambda() == p);
    CHECK_THROWS(p.divide_one_minus_lambda()); // p(1) != 0
    CHECK(IntegerPolynomial::from_ints({0}).is_zero());
    CHECK(IntegerPolynomial::from_ints({1, -1}) * IntegerPolynomial::from_ints({1, 1}) ==
          IntegerPolynomial::from_ints({1, 0, -1}));
}

TEST_CASE("ideal generators form an antichain") {
    SquarefreeMonomialIdeal i =
        SquarefreeMonomialIdeal::make(3, {vmask_of({1, 2}), vmask_of({1, 2, 3}), vmask_of({2, 3})});
    CHECK(i.generators == std::vector<Vmask>{vmask_of({1, 2}), vmask_of({2, 3})});
    CHECK_THROWS_AS(SquarefreeMonomialIdeal::make(2, {0}), IdealImproper);
    CHECK(SquarefreeMonomialIdeal::make(2, {}).is_zero());
}

TEST_CASE("Hilbert series of the pentagon") {
    HilbertSeries h = hilbert_series_of_ideal(edge_ideal(c5()));
    CHECK(h.numerator == IntegerPolynomial::from_ints({1, 3, 1}));
    CHECK(h.dpow == 2);
    std::vector<mpz_class> values = series_expansion(h, 3);
    CHECK(values == std::vector<mpz_class>{1, 5, 10, 15});
    CHECK(h_polynomial(h).degree == 2);
}

TEST_CASE("Hilbert series of the zero ideal is the free ring") {
    HilbertSeries h = hilbert_series_of_ideal(SquarefreeMonomialIdeal::make(3, {}));
    CHECK(h.numerator == IntegerPolynomial::one());
    CHECK(h.dpow == 3);
}

TEST_CASE("Stanley-Reisner complex inverts the independence construction") {
    SimplicialComplex a = stanley_reisner_complex(edge_ideal(c5()));
    SimplicialComplex b = independence_complex(c5());
    CHECK(a.faces() == b.faces());
}

TEST_CASE("colon and sum by a variable") {
    SquarefreeMonomialIdeal i = edge_ideal(c5());
    // I(C5) : x1 contains its neighbors x2, x5 as variables.
    SquarefreeMonomialIdeal colon = colon_by_variable(i, 1);
    CHECK(std::find(colon.generators.begin(), colon.generators.end(), vbit(2)) !=
          colon.generators.end());
    CHECK(std::find(colon.generators.begin(), colon.generators.end(), vbit(5)) !=
          colon.generators.end());
    SquarefreeMonomialIdeal added = add_variable(i, 1);
    CHECK(std::find(added.generators.begin(), added.generators.end(), vbit(1)) !=
          added.generators.end());
    CHECK_THROWS_AS(colon_by_variable(i, 6), VariableAbsent);
}

TEST_CASE("graded Betti numbers and regularity of the pentagon") {
    FieldSpec q = FieldSpec::rationals();
    BettiTable betti = graded_betti(edge_ideal(c5()), q);
    CHECK(betti.entries.at({1, 2}) == 5); // one syzygy generator per edge
    CHECK(regularity_quotient(edge_ideal(c5()), q) == 2);
    CHECK(regularity_ideal(edge_ideal(c5()), q) == 3);
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    CHECK(regularity_quotient(edge_ideal(k2), q) == 1);
}

TEST_CASE("colon-sum additivity at a vertex") {
    AdditivityReport rep = check_colon_sum_additivity(edge_ideal(c5()), 1, FieldSpec::rationals());
    CHECK(rep.hilbert_ok);
    CHECK(rep.regularity_ok);
    CHECK(rep.ok());
}
