#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ei/graph.hpp"

using namespace ei;

namespace {

Graph c5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

} // namespace

TEST_CASE("vertex mask helpers") {
    Vmask m = vmask_of({2, 5, 7});
    CHECK(vcount(m) == 3);
    CHECK(vhas(m, 2));
    CHECK(!vhas(m, 3));
    CHECK(vlowest(m) == 2);
    CHECK(vmembers(m) == std::vector<int>{2, 5, 7});
}

TEST_CASE("lexicographic order on member lists") {
    CHECK(lex_less(vmask_of({1, 4}), vmask_of({2, 3})));
    CHECK(!lex_less(vmask_of({2, 3}), vmask_of({1, 4})));
    CHECK(lex_less(vmask_of({1}), vmask_of({1, 2}))); // proper prefix first
    CHECK(!lex_less(vmask_of({1, 2}), vmask_of({1, 2})));
}

TEST_CASE("graph construction canonicalizes edges") {
    Graph g = Graph::from_edges(3, {{2, 1}, {1, 2}, {2, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidEdge);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), InvalidEdge);
    CHECK_THROWS_AS(Graph::from_edges(0, {{1, 2}}), InvalidEdge);
    CHECK_THROWS_AS(Graph::from_edges(63, {}), CapacityExceeded);
}

TEST_CASE("induced subgraph relabels") {
    InducedSubgraph sub = induced_subgraph(c5(), vmask_of({2, 3, 5}));
    CHECK(sub.labels == std::vector<int>{2, 3, 5});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("independence on the pentagon") {
    Graph g = c5();
    CHECK(is_independent(g, vmask_of({1, 3})));
    CHECK(!is_independent(g, vmask_of({1, 2})));
    CHECK(independence_number(g) == 2);
    CHECK(independent_sets_of_size(g, 2) ==
          std::vector<Vmask>{vmask_of({1, 3}), vmask_of({1, 4}), vmask_of({2, 4}),
                             vmask_of({2, 5}), vmask_of({3, 5})});
    CHECK(least_independent_set(g, 2) == vmask_of({1, 3}));
    CHECK(least_independent_set(g, 0) == 0);
    CHECK_THROWS_AS(least_independent_set(g, 3), InvalidParameter);
}

TEST_CASE("disjoint union shifts labels") {
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    Graph u = disjoint_union({k2, k2});
    CHECK(u.vertex_count() == 4);
    CHECK(u.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(!is_connected(u));
    CHECK(is_connected(c5()));
}

TEST_CASE("isolated vertex detection") {
    CHECK(has_isolated_vertex(Graph::from_edges(3, {{1, 2}})));
    CHECK(!has_isolated_vertex(c5()));
}
