#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ei/edge_ideal.hpp"
#include "ei/suspension.hpp"

using namespace ei;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, edges);
}

HilbertSeries series_of(const Graph& g) { return hilbert_series_of_ideal(edge_ideal(g)); }

} // namespace

TEST_CASE("pentagon suspension over the empty set") {
    Graph g = cycle(5);
    Graph gs = s_suspension(g, 0);
    CHECK(gs.vertex_count() == 6);
    // new vertex adjacent to every original vertex
    CHECK(vcount(gs.neighbors(6)) == 5);
    InvariantReport rep = invariant_report(gs, FieldSpec::rationals());
    CHECK(rep.hcoeffs == IntegerPolynomial::from_ints({1, 4}));
    CHECK(rep.dim == 2);
    CHECK(rep.im == 1);
    CHECK(rep.reg == 2);
    CHECK(rep.m == 3);
    CHECK(series_of(gs) == predict_s_suspension(series_of(g), 0));
}

TEST_CASE("pentagon suspension over an edge") {
    Graph g = cycle(5);
    Graph ge = edge_s_suspension(g, {1, 2}, 0);
    CHECK(ge.vertex_count() == 6);
    CHECK(ge.neighbors(6) == vmask_of({3, 4, 5}));
    CHECK(matching_number(ge) == 3);
    CHECK(series_of(ge) == predict_edge_s_suspension(series_of(g), 0));
}

TEST_CASE("prediction when S is a maximum independent set") {
    // K2 with S = {1}: (1-λ)(1+λ) + λ over (1-λ)^2.
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    HilbertSeries predicted = predict_s_suspension(series_of(k2), 1);
    CHECK(predicted.numerator == IntegerPolynomial::from_ints({1, 1, -1}));
    CHECK(predicted.dpow == 2);
    CHECK(series_of(s_suspension(k2, vbit(1))) == predicted);
}

TEST_CASE("edge suspension prediction on two disjoint edges") {
    Graph g = Graph::from_edges(4, {{1, 2}, {3, 4}});
    HilbertSeries predicted = predict_edge_s_suspension(series_of(g), 1);
    CHECK(predicted.numerator == IntegerPolynomial::from_ints({1, 2, 0, -1}));
    CHECK(predicted.dpow == 3);
    CHECK(series_of(edge_s_suspension(g, {1, 2}, vbit(3))) == predicted);
}

TEST_CASE("suspension preconditions") {
    Graph g = cycle(5);
    CHECK_THROWS_AS(s_suspension(g, vmask_of({1, 2})), NotIndependent);
    CHECK_THROWS_AS(s_suspension(Graph::from_edges(3, {{1, 2}}), 0), IsolatedVertex);
    CHECK_THROWS_AS(edge_s_suspension(g, {1, 3}, 0), NotAnEdge);
    CHECK_THROWS_AS(edge_s_suspension(g, {1, 2}, vbit(3)), AdjacencyViolation);
    CHECK_THROWS_AS(predict_s_suspension(series_of(g), 3), SizeOutOfRange);
    CHECK_THROWS_AS(predict_s_suspension(series_of(g), -1), SizeOutOfRange);
}

TEST_CASE("domination hypothesis") {
    // In C4 every vertex outside an edge has a neighbor on it; in C5 vertex 4
    // is out of reach of the edge {1,2}.
    CHECK(check_domination_hypothesis(cycle(4), {1, 2}, 0));
    CHECK(!check_domination_hypothesis(cycle(5), {1, 2}, 0));
}

TEST_CASE("octagon chain") {
    Graph g = cycle(8);
    HilbertSeries h = series_of(g);
    CHECK(h.numerator == IntegerPolynomial::from_ints({1, 4, 2, -4, -1}));

    Graph g1 = s_suspension(g, 0);
    HilbertSeries h1 = series_of(g1);
    CHECK(h1 == predict_s_suspension(h, 0));
    CHECK(h1.numerator == IntegerPolynomial::from_ints({1, 5, -1, -1, -2}));

    Graph g2 = edge_s_suspension(g1, {1, 9}, 0);
    HilbertSeries h2 = series_of(g2);
    CHECK(h2 == predict_edge_s_suspension(h1, 0));
    CHECK(h2.numerator == IntegerPolynomial::from_ints({1, 6, -2, -2, -1}));

    Graph g3 = edge_s_suspension(g2, {3, 9}, 0);
    HilbertSeries h3 = series_of(g3);
    CHECK(h3 == predict_edge_s_suspension(h2, 0));
    CHECK(h3.numerator == IntegerPolynomial::from_ints({1, 7, -3, -3}));

    for (const Graph& x : {g, g1, g2, g3}) {
        InvariantReport rep = invariant_report(x, FieldSpec::rationals());
        CHECK(rep.im == 2);
        CHECK(rep.reg == 3);
    }
}
