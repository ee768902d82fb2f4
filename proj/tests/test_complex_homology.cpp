#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ei/homology.hpp"

using namespace ei;

namespace {

Graph c5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

} // namespace

TEST_CASE("independence complex of the pentagon") {
    SimplicialComplex k = independence_complex(c5());
    CHECK(k.dimension() == 1);
    CHECK(f_vector(k).f == std::vector<long long>{1, 5, 5});
}

TEST_CASE("facet closure") {
    SimplicialComplex k = SimplicialComplex::from_facets(4, {vmask_of({1, 2, 3}), vmask_of({3, 4})});
    CHECK(f_vector(k).f == std::vector<long long>{1, 4, 4, 1});
    CHECK(k.dimension() == 2);
}

TEST_CASE("face list must be downward closed") {
    CHECK_THROWS(SimplicialComplex::from_faces(2, {0, vmask_of({1, 2})}));
    SimplicialComplex ok = SimplicialComplex::from_faces(2, {0, vbit(1), vbit(2), vmask_of({1, 2})});
    CHECK(ok.dimension() == 1);
}

TEST_CASE("homology of a circle") {
    // Ind(C5) is a 5-cycle, a topological circle.
    SimplicialComplex k = independence_complex(c5());
    std::vector<long long> ranks = reduced_homology_ranks(k, FieldSpec::rationals());
    REQUIRE(ranks.size() == 3);
    CHECK(ranks[0] == 0); // H~_{-1}
    CHECK(ranks[1] == 0); // H~_0
    CHECK(ranks[2] == 1); // H~_1
    CHECK(reduced_homology_ranks_snf(k) == ranks);
    CHECK(reduced_homology_ranks(k, FieldSpec::prime(2)) == ranks);
}

TEST_CASE("homology of a solid simplex vanishes") {
    SimplicialComplex k = SimplicialComplex::from_facets(4, {vmask_of({1, 2, 3, 4})});
    for (long long r : reduced_homology_ranks(k, FieldSpec::rationals())) CHECK(r == 0);
    for (long long r : reduced_homology_ranks_snf(k)) CHECK(r == 0);
}

TEST_CASE("homology of two points") {
    SimplicialComplex k = SimplicialComplex::from_facets(2, {vbit(1), vbit(2)});
    std::vector<long long> ranks = reduced_homology_ranks(k, FieldSpec::rationals());
    CHECK(ranks[1] == 1);
    CHECK(reduced_homology_ranks_snf(k) == ranks);
}

TEST_CASE("homology of the empty complex") {
    // {∅} is the (-1)-sphere: H~_{-1} has rank 1.
    SimplicialComplex k = SimplicialComplex::from_faces(1, {0});
    std::vector<long long> ranks = reduced_homology_ranks(k, FieldSpec::rationals());
    CHECK(ranks == std::vector<long long>{1});
    CHECK(reduced_homology_ranks_snf(k) == ranks);
}

TEST_CASE("backends agree on independence complexes of small graphs") {
    for (int n = 2; n <= 5; ++n) {
        // path graphs
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        SimplicialComplex k = independence_complex(Graph::from_edges(n, edges));
        CHECK(reduced_homology_ranks(k, FieldSpec::rationals()) == reduced_homology_ranks_snf(k));
        CHECK(reduced_homology_ranks(k, FieldSpec::prime(3)) == reduced_homology_ranks_snf(k));
    }
}
