#include "ei/constructor.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ei/io.hpp"

namespace ei {

namespace {

HilbertSeries series_of(const Graph& g) {
    return hilbert_series_of_ideal(edge_ideal(g));
}

HilbertSeries series_from_report(const InvariantReport& rep) {
    HilbertSeries h;
    h.numerator = rep.hcoeffs;
    h.dpow = rep.dim;
    return h;
}

void append_step(std::vector<CertificateStep>* log, SuspensionStep::Kind kind, Vmask s,
                 std::optional<std::pair<int, int>> edge, int new_vertex,
                 const HilbertSeries& predicted, const HilbertSeries& computed) {
    if (!log) return;
    CertificateStep entry;
    entry.step.kind = kind;
    entry.step.s = s;
    entry.step.edge = edge;
    entry.step.new_vertex = new_vertex;
    entry.predicted = predicted;
    entry.computed = computed;
    log->push_back(entry);
}

bool is_base_for(const InvariantReport& rep, int r) {
    return rep.connected && rep.im == 1 && rep.reg == r && rep.dim == r;
}

Graph increase_impl(const Graph& g, const FieldSpec& field, std::vector<CertificateStep>* log,
                    const InvariantReport* pre, InvariantReport* post) {
    if (has_isolated_vertex(g))
        throw IsolatedVertex("suspension step requires a graph without isolated vertices");
    InvariantReport rep0 = pre ? *pre : invariant_report(g, field);
    int d = rep0.dim;
    Vmask s = least_independent_set(g, d);
    HilbertSeries predicted = predict_s_suspension(series_from_report(rep0), d);
    Graph out = s_suspension(g, s);
    InvariantReport rep1 = invariant_report(out, field);
    HilbertSeries computed = series_from_report(rep1);
    if (!(computed == predicted) || rep1.im != rep0.im || rep1.reg != rep0.reg ||
        rep1.s != rep0.s + 1 || rep1.dim != d + 1 || !rep1.connected)
        throw VerificationFailed("degree-increase step did not behave as predicted");
    append_step(log, SuspensionStep::Kind::S, s, std::nullopt, g.vertex_count() + 1,
                predicted, computed);
    if (post) *post = rep1;
    return out;
}

Graph decrease_impl(const Graph& g, const FieldSpec& field, std::vector<CertificateStep>* log,
                    const InvariantReport* pre, InvariantReport* post) {
    if (has_isolated_vertex(g))
        throw IsolatedVertex("suspension step requires a graph without isolated vertices");
    InvariantReport rep0 = pre ? *pre : invariant_report(g, field);
    if (rep0.reg < 2)
        throw RegularityTooSmall("degree-decrease step requires regularity >= 2");
    int s = rep0.s;
    if (s < 2)
        throw DegreeTooSmall("degree-decrease step requires deg h >= 2");
    int d = rep0.dim;

    Graph cur = g;
    HilbertSeries h = series_from_report(rep0);
    while (h.numerator.degree() == s) {
        bool positive = h.numerator.coeff(s) > 0;
        bool single = (positive && s % 2 == 0) || (!positive && s % 2 == 1);
        if (single) {
            // One suspension over a least independent set of size d-s moves
            // h_s by one toward zero.
            Vmask set = least_independent_set(cur, d - s);
            HilbertSeries predicted = predict_s_suspension(h, d - s);
            int w = cur.vertex_count() + 1;
            cur = s_suspension(cur, set);
            HilbertSeries computed = series_of(cur);
            if (!(computed == predicted))
                throw VerificationFailed("suspension series mismatch in decrease step");
            append_step(log, SuspensionStep::Kind::S, set, std::nullopt, w, predicted, computed);
            h = computed;
        } else {
            // Three-step round: suspend over S, then over edges {x_a,w} and
            // {x_b,w}, where x_a < x_b are the two largest members of a least
            // independent set of size d-s+2 and S is the rest.
            Vmask t = least_independent_set(cur, d - s + 2);
            std::vector<int> members = vmembers(t);
            int xb = members[members.size() - 1];
            int xa = members[members.size() - 2];
            Vmask set = t & ~vbit(xa) & ~vbit(xb);
            int size_s = d - s;

            HilbertSeries predicted = predict_s_suspension(h, size_s);
            int w = cur.vertex_count() + 1;
            cur = s_suspension(cur, set);
            HilbertSeries computed = series_of(cur);
            if (!(computed == predicted))
                throw VerificationFailed("suspension series mismatch in decrease step");
            append_step(log, SuspensionStep::Kind::S, set, std::nullopt, w, predicted, computed);

            for (int x : {xa, xb}) {
                predicted = predict_edge_s_suspension(computed, size_s);
                int w2 = cur.vertex_count() + 1;
                cur = edge_s_suspension(cur, {x, w}, set);
                computed = series_of(cur);
                if (!(computed == predicted))
                    throw VerificationFailed("edge suspension series mismatch in decrease step");
                append_step(log, SuspensionStep::Kind::EdgeS, set, std::make_pair(x, w), w2,
                            predicted, computed);
            }
            h = computed;
        }
    }

    InvariantReport rep1 = invariant_report(cur, field);
    if (rep1.im != rep0.im || rep1.reg != rep0.reg || rep1.dim != d || rep1.s >= s ||
        !(series_from_report(rep1) == h))
        throw VerificationFailed("degree-decrease step did not behave as predicted");
    if (post) *post = rep1;
    return cur;
}

} // namespace

BaseGraphProvider::BaseGraphProvider() {
    registry_[1] = {Graph::from_edges(2, {{1, 2}}), "K2"};
    registry_[2] = {Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), "C5"};
}

Graph BaseGraphProvider::get(int r, const FieldSpec& field) {
    if (r < 1)
        throw InvalidParameter("base graph index must be positive");
    auto it = registry_.find(r);
    if (it != registry_.end()) {
        InvariantReport rep = invariant_report(it->second.graph, field);
        if (!is_base_for(rep, r))
            throw VerificationFailed("registry base graph failed verification");
        return it->second.graph;
    }
    if (!dir_.empty()) {
        std::filesystem::path path = std::filesystem::path(dir_) / ("L_" + std::to_string(r) + ".json");
        if (std::filesystem::exists(path)) {
            Graph candidate = read_graph_file(path.string());
            InvariantReport rep = invariant_report(candidate, field);
            if (is_base_for(rep, r)) return candidate;
        }
    }
    for (long long t = 0; t < budget_; ++t) {
        std::mt19937_64 rng(seed_ + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
        int n = 6 + static_cast<int>(t % 9);
        double p = 0.15 + 0.1 * static_cast<double>((t / 9) % 5);
        std::bernoulli_distribution coin(p);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        if (edges.empty()) continue;
        Graph candidate = Graph::from_edges(n, edges);
        if (!is_connected(candidate) || has_isolated_vertex(candidate)) continue;
        if (!is_gap_free(candidate)) continue;
        if (independence_number(candidate) != r) continue;
        InvariantReport rep = invariant_report(candidate, field);
        if (is_base_for(rep, r)) return candidate;
    }
    throw BaseUnavailable("no verified base graph for r = " + std::to_string(r) +
                          " (supply one as L_" + std::to_string(r) + ".json or raise the search budget)");
}

Graph star_graph(int s) {
    if (s < 1)
        throw InvalidParameter("star graph needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= s + 1; ++v) edges.emplace_back(1, v);
    Graph g = Graph::from_edges(s + 1, edges);
    InvariantReport rep = invariant_report(g, FieldSpec::rationals());
    if (rep.im != 1 || rep.reg != 1 || rep.dim != s || rep.s != s)
        throw VerificationFailed("star graph failed verification");
    return g;
}

Graph base_gap_free(int r, BaseGraphProvider& provider, const FieldSpec& field) {
    if (r < 1)
        throw InvalidParameter("base graph index must be positive");
    return provider.get(r, field);
}

Graph increase_deg_step(const Graph& g, const FieldSpec& field, std::vector<CertificateStep>* log) {
    return increase_impl(g, field, log, nullptr, nullptr);
}

Graph decrease_deg_step(const Graph& g, const FieldSpec& field, std::vector<CertificateStep>* log) {
    return decrease_impl(g, field, log, nullptr, nullptr);
}

Certificate build(int a, int r, int s, BaseGraphProvider& provider, const FieldSpec& field) {
    if (a < 1 || a > r || s < 1)
        throw InvalidTriple("need 1 <= a <= r and s >= 1");

    Certificate cert;
    cert.a = a;
    cert.r = r;
    cert.s = s;
    cert.field = field;
    cert.seed = provider.seed();

    Graph g0;
    if (a == 1 && r == 1) {
        g0 = star_graph(s);
    } else if (a == 1) {
        g0 = base_gap_free(r, provider, field);
    } else {
        // When the target degree is below a, a base already reduced to
        // deg h = 1 keeps the construction inside the vertex capacity.
        int rb = r - a + 1;
        Graph b = (s < a && rb >= 2) ? build(1, rb, 1, provider, field).result
                                     : base_gap_free(rb, provider, field);
        std::vector<Graph> parts{b};
        Graph k2 = Graph::from_edges(2, {{1, 2}});
        for (int i = 1; i < a; ++i) parts.push_back(k2);
        g0 = disjoint_union(parts);
    }
    cert.base = g0;

    Graph cur = g0;
    InvariantReport rep = invariant_report(cur, field);
    while (true) {
        if (rep.s < s) {
            cur = increase_impl(cur, field, &cert.steps, &rep, &rep);
        } else if (rep.s > s) {
            cur = decrease_impl(cur, field, &cert.steps, &rep, &rep);
        } else if (!rep.connected) {
            // A single suspension connects the graph; the next pass brings
            // the degree back down.
            cur = increase_impl(cur, field, &cert.steps, &rep, &rep);
        } else {
            break;
        }
    }

    cert.result = cur;
    cert.report = rep;
    if (rep.im != a || rep.reg != r || rep.s != s || !rep.connected)
        throw VerificationFailed("constructed graph does not match the target triple");
    return cert;
}

} // namespace ei
