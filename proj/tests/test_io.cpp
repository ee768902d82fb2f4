#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ei/io.hpp"

using namespace ei;

namespace {

Graph c5() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

} // namespace

TEST_CASE("graph JSON round trip") {
    Graph g = c5();
    CHECK(graph_from_json(graph_to_json(g)) == g);

    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "ei_roundtrip.json").string();
    write_graph_file(g, path);
    CHECK(read_graph_file(path) == g);
}

TEST_CASE("graph JSON validation") {
    CHECK_THROWS_AS(graph_from_json("not json"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[1]]}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[1, 1]]}"), InvalidEdge);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[1, 4]]}"), InvalidEdge);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("DOT export") {
    std::string dot = to_dot(Graph::from_edges(2, {{1, 2}}));
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("x1 -- x2;") != std::string::npos);
}

TEST_CASE("report JSON carries all fields") {
    InvariantReport rep = invariant_report(c5(), FieldSpec::rationals());
    std::string json = report_to_json(rep);
    for (const char* key : {"\"n\"", "\"connected\"", "\"im\"", "\"m\"", "\"reg\"", "\"dim\"",
                            "\"h\"", "\"s\"", "\"field\""})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("certificate serialization and replay") {
    BaseGraphProvider provider;
    Certificate cert = build(1, 2, 2, provider, FieldSpec::rationals());
    std::string text = certificate_to_json(cert);
    CHECK(replay_certificate(text) == cert.result);
    CHECK(text.find("\"target\"") != std::string::npos);
    CHECK(text.find("\"seed\"") != std::string::npos);
}
