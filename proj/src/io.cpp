#include "ei/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ei {

namespace {

using json = nlohmann::ordered_json;

json graph_obj(const Graph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_obj(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("graph JSON must be {\"n\": int, \"edges\": [[i,j],...]}");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a 2-element integer array");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
}

json series_obj(const HilbertSeries& h) {
    json num = json::array();
    for (long long c : h.numerator.to_ints()) num.push_back(c);
    return json{{"numerator", num}, {"dpow", h.dpow}};
}

json members_array(Vmask m) {
    json out = json::array();
    for (int v : vmembers(m)) out.push_back(v);
    return out;
}

json report_obj(const InvariantReport& rep) {
    json h = json::array();
    for (long long c : rep.hcoeffs.to_ints()) h.push_back(c);
    return json{{"n", rep.n},     {"connected", rep.connected}, {"im", rep.im},
                {"m", rep.m},     {"reg", rep.reg},             {"dim", rep.dim},
                {"h", h},         {"s", rep.s},                 {"field", rep.field.to_string()}};
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

} // namespace

std::string graph_to_json(const Graph& g) { return graph_obj(g).dump(2) + "\n"; }

Graph graph_from_json(const std::string& text) { return graph_from_obj(parse_text(text)); }

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << graph_to_json(g);
}

std::string report_to_json(const InvariantReport& rep) { return report_obj(rep).dump(2) + "\n"; }

std::string certificate_to_json(const Certificate& cert) {
    json steps = json::array();
    for (const CertificateStep& st : cert.steps) {
        json entry;
        entry["kind"] = st.step.kind == SuspensionStep::Kind::S ? "s" : "edge_s";
        entry["S"] = members_array(st.step.s);
        if (st.step.edge) entry["edge"] = {st.step.edge->first, st.step.edge->second};
        entry["predicted_h"] = series_obj(st.predicted);
        entry["computed_h"] = series_obj(st.computed);
        steps.push_back(entry);
    }
    json j{{"target", json{{"a", cert.a}, {"r", cert.r}, {"s", cert.s}}},
           {"base", graph_obj(cert.base)},
           {"steps", steps},
           {"report", report_obj(cert.report)},
           {"field", cert.field.to_string()},
           {"seed", cert.seed}};
    return j.dump(2) + "\n";
}

void write_certificate_file(const Certificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << certificate_to_json(cert);
}

Graph replay_certificate(const std::string& text) {
    json j = parse_text(text);
    Graph g = graph_from_obj(j.at("base"));
    for (const auto& st : j.at("steps")) {
        std::vector<int> members;
        for (const auto& v : st.at("S")) members.push_back(v.get<int>());
        Vmask s = vmask_of(members);
        std::string kind = st.at("kind").get<std::string>();
        if (kind == "s") {
            g = s_suspension(g, s);
        } else if (kind == "edge_s") {
            const auto& e = st.at("edge");
            g = edge_s_suspension(g, {e.at(0).get<int>(), e.at(1).get<int>()}, s);
        } else {
            throw ParseError("unknown step kind: " + kind);
        }
    }
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 1; v <= g.vertex_count(); ++v) out << "  x" << v << ";\n";
    for (auto [i, j] : g.edges()) out << "  x" << i << " -- x" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace ei
