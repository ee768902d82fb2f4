#include "ei/suspension.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ei {

namespace {

HilbertSeries reduce_lowest_terms(IntegerPolynomial num, int dpow) {
    while (num.at_one() == 0 && dpow > 0) {
        num = num.divide_one_minus_lambda();
        --dpow;
    }
    HilbertSeries h;
    h.numerator = std::move(num);
    h.dpow = dpow;
    return h;
}

} // namespace

Graph s_suspension(const Graph& g, Vmask s) {
    if (has_isolated_vertex(g))
        throw IsolatedVertex("s_suspension requires a graph without isolated vertices");
    if (!is_independent(g, s))
        throw NotIndependent("S must be an independent set");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 1; v <= n; ++v)
        if (!vhas(s, v)) edges.emplace_back(v, n + 1);
    return Graph::from_edges(n + 1, edges);
}

Graph edge_s_suspension(const Graph& g, std::pair<int, int> e, Vmask s) {
    auto [i, j] = e;
    if (i < 1 || i > g.vertex_count() || j < 1 || j > g.vertex_count() || !g.has_edge(i, j))
        throw NotAnEdge("{" + std::to_string(i) + "," + std::to_string(j) + "} is not an edge");
    if (!is_independent(g, s))
        throw NotIndependent("S must be an independent set");
    if ((g.neighbors(i) | g.neighbors(j)) & s)
        throw AdjacencyViolation("S touches the suspension edge");
    int n = g.vertex_count();
    Vmask excluded = s | vbit(i) | vbit(j);
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 1; v <= n; ++v)
        if (!vhas(excluded, v)) edges.emplace_back(v, n + 1);
    return Graph::from_edges(n + 1, edges);
}

bool check_domination_hypothesis(const Graph& g, std::pair<int, int> e, Vmask s) {
    auto [i, j] = e;
    if (i < 1 || i > g.vertex_count() || j < 1 || j > g.vertex_count() || !g.has_edge(i, j))
        throw NotAnEdge("{" + std::to_string(i) + "," + std::to_string(j) + "} is not an edge");
    if (!is_independent(g, s))
        throw NotIndependent("S must be an independent set");
    if ((g.neighbors(i) | g.neighbors(j)) & s)
        throw AdjacencyViolation("S touches the suspension edge");
    Vmask inside = s | vbit(i) | vbit(j);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (vhas(inside, v)) continue;
        if ((g.neighbors(v) & inside) == 0) return false;
    }
    return true;
}

HilbertSeries predict_s_suspension(const HilbertSeries& h, int size_s) {
    if (size_s < 0 || size_s > h.dpow)
        throw SizeOutOfRange("|S| must lie in 0..d");
    int d = std::max(h.dpow, size_s + 1);
    IntegerPolynomial lambda = IntegerPolynomial::from_ints({0, 1});
    IntegerPolynomial num = h.numerator.times_one_minus_lambda(d - h.dpow) +
                            lambda.times_one_minus_lambda(d - size_s - 1);
    return reduce_lowest_terms(std::move(num), d);
}

HilbertSeries predict_edge_s_suspension(const HilbertSeries& h, int size_s) {
    if (size_s < 0 || size_s > h.dpow)
        throw SizeOutOfRange("|S| must lie in 0..d");
    int d = std::max(h.dpow, size_s + 2);
    IntegerPolynomial lam_lamp1 = IntegerPolynomial::from_ints({0, 1, 1}); // λ(1+λ)
    IntegerPolynomial num = h.numerator.times_one_minus_lambda(d - h.dpow) +
                            lam_lamp1.times_one_minus_lambda(d - size_s - 2);
    return reduce_lowest_terms(std::move(num), d);
}

} // namespace ei
