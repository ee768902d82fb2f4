#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ei/constructor.hpp"
#include "ei/io.hpp"

using namespace ei;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, edges);
}

HilbertSeries series_of(const Graph& g) { return hilbert_series_of_ideal(edge_ideal(g)); }

} // namespace

TEST_CASE("star graphs") {
    CHECK(star_graph(1) == Graph::from_edges(2, {{1, 2}}));
    CHECK(series_of(star_graph(2)).numerator == IntegerPolynomial::from_ints({1, 1, -1}));
    CHECK(series_of(star_graph(3)).numerator == IntegerPolynomial::from_ints({1, 1, -2, 1}));
    InvariantReport rep = invariant_report(star_graph(3), kQ);
    CHECK(rep.im == 1);
    CHECK(rep.reg == 1);
    CHECK(rep.dim == 3);
    CHECK(rep.s == 3);
    CHECK_THROWS_AS(star_graph(0), InvalidParameter);
}

TEST_CASE("base graph provider") {
    BaseGraphProvider provider;
    CHECK(base_gap_free(1, provider, kQ) == Graph::from_edges(2, {{1, 2}}));
    CHECK(base_gap_free(2, provider, kQ) == cycle(5));
    CHECK_THROWS_AS(base_gap_free(3, provider, kQ), BaseUnavailable);
    CHECK_THROWS_AS(base_gap_free(0, provider, kQ), InvalidParameter);
}

TEST_CASE("degree increase step") {
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    CHECK(series_of(increase_deg_step(k2, kQ)).numerator ==
          IntegerPolynomial::from_ints({1, 1, -1}));

    InvariantReport before = invariant_report(cycle(5), kQ);
    InvariantReport after = invariant_report(increase_deg_step(cycle(5), kQ), kQ);
    CHECK(after.s == before.s + 1);
    CHECK(after.dim == before.dim + 1);
    CHECK(after.im == before.im);
    CHECK(after.reg == before.reg);

    Graph two_k2 = Graph::from_edges(4, {{1, 2}, {3, 4}});
    InvariantReport joined = invariant_report(increase_deg_step(two_k2, kQ), kQ);
    CHECK(joined.connected);
    CHECK(joined.s == 3);
    CHECK(joined.im == 2);
    CHECK(joined.reg == 2);
}

TEST_CASE("degree decrease step") {
    Graph out = decrease_deg_step(cycle(5), kQ);
    CHECK(series_of(out).numerator == IntegerPolynomial::from_ints({1, 4}));

    std::vector<CertificateStep> log;
    Graph from_c8 = decrease_deg_step(cycle(8), kQ, &log);
    CHECK(series_of(from_c8).numerator == IntegerPolynomial::from_ints({1, 7, -3, -3}));
    REQUIRE(log.size() == 3);
    CHECK(log[0].step.kind == SuspensionStep::Kind::S);
    CHECK(log[1].step.edge == std::make_pair(1, 9));
    CHECK(log[2].step.edge == std::make_pair(3, 9));

    CHECK_THROWS_AS(decrease_deg_step(Graph::from_edges(2, {{1, 2}}), kQ), RegularityTooSmall);
    CHECK_THROWS_AS(decrease_deg_step(s_suspension(cycle(5), 0), kQ), DegreeTooSmall);
}

TEST_CASE("build simple targets") {
    BaseGraphProvider provider;
    Certificate c121 = build(1, 2, 1, provider, kQ);
    CHECK(c121.result.vertex_count() == 6);
    CHECK(c121.report.hcoeffs == IntegerPolynomial::from_ints({1, 4}));

    Certificate c113 = build(1, 1, 3, provider, kQ);
    CHECK(c113.result == star_graph(3));

    Certificate c222 = build(2, 2, 2, provider, kQ);
    CHECK(c222.report.im == 2);
    CHECK(c222.report.reg == 2);
    CHECK(c222.report.s == 2);
    CHECK(c222.report.connected);
    CHECK(c222.steps.size() >= 2); // one increase, one decrease round

    CHECK_THROWS_AS(build(2, 1, 1, provider, kQ), InvalidTriple);
    CHECK_THROWS_AS(build(1, 1, 0, provider, kQ), InvalidTriple);
    CHECK_THROWS_AS(build(1, 3, 1, provider, kQ), BaseUnavailable);
}

TEST_CASE("certificates replay and are deterministic") {
    BaseGraphProvider provider;
    Certificate cert = build(2, 3, 2, provider, kQ);
    std::string text = certificate_to_json(cert);
    CHECK(replay_certificate(text) == cert.result);

    BaseGraphProvider provider2;
    CHECK(certificate_to_json(build(2, 3, 2, provider2, kQ)) == text);
}

TEST_CASE("external base directory") {
    // A provider pointed at a directory containing a verified candidate for
    // r=2 is exercised through an unregistered slot by renaming C5.
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ei_bases";
    fs::create_directories(dir);
    // An invalid candidate for r=3 must be rejected.
    write_graph_file(cycle(5), (dir / "L_3.json").string());
    BaseGraphProvider provider;
    provider.set_directory(dir.string());
    CHECK_THROWS_AS(base_gap_free(3, provider, kQ), BaseUnavailable);
}

TEST_CASE("randomized base search serves only verified graphs") {
    BaseGraphProvider provider;
    provider.set_seed(5);
    provider.set_search_budget(60);
    try {
        Graph g = base_gap_free(3, provider, kQ);
        InvariantReport rep = invariant_report(g, kQ);
        CHECK(rep.im == 1);
        CHECK(rep.reg == 3);
        CHECK(rep.dim == 3);
        CHECK(rep.connected);
    } catch (const BaseUnavailable&) {
        // acceptable: the budget may be exhausted without a hit
    }
}
