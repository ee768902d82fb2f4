#include "ei/edge_ideal.hpp"

#include <algorithm>

namespace ei {

SquarefreeMonomialIdeal edge_ideal(const Graph& g) {
    if (g.edge_count() == 0)
        throw NoEdges("edge ideal of an edgeless graph is zero");
    std::vector<Vmask> gens;
    gens.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [i, j] : g.edges())
        gens.push_back(vbit(i) | vbit(j));
    return SquarefreeMonomialIdeal::make(g.vertex_count(), std::move(gens));
}

namespace {

// Branch and bound over the lowest uncovered vertex: either it stays
// unmatched or it is matched to one of its available neighbors.
int matching_rec(const Graph& g, Vmask avail) {
    if (!avail) return 0;
    int v = vlowest(avail);
    Vmask rest = avail & ~vbit(v);
    int cap = vcount(avail) / 2;
    int best = 0;
    Vmask nb = g.neighbors(v) & rest;
    while (nb && best < cap) {
        int u = vlowest(nb);
        nb &= nb - 1;
        best = std::max(best, 1 + matching_rec(g, rest & ~vbit(u)));
    }
    if (best < cap)
        best = std::max(best, matching_rec(g, rest)); // v unmatched
    return best;
}

// Induced matching search: after picking edge {u,v}, every vertex of
// N[u] ∪ N[v] is banned for the remaining edges.
int induced_matching_rec(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                         std::size_t from, Vmask banned, int& best, int chosen) {
    best = std::max(best, chosen);
    for (std::size_t e = from; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (vhas(banned, u) || vhas(banned, v)) continue;
        Vmask nb = g.neighbors(u) | g.neighbors(v) | vbit(u) | vbit(v);
        induced_matching_rec(g, edges, e + 1, banned | nb, best, chosen + 1);
    }
    return best;
}

} // namespace

int matching_number(const Graph& g) {
    return matching_rec(g, g.vertex_mask());
}

int induced_matching_number(const Graph& g) {
    int best = 0;
    induced_matching_rec(g, g.edges(), 0, 0, best, 0);
    return best;
}

bool is_gap_free(const Graph& g) {
    if (g.edge_count() == 0)
        throw NoEdges("gap-freeness is defined for graphs with at least one edge");
    return induced_matching_number(g) == 1;
}

InvariantReport invariant_report(const Graph& g, const FieldSpec& field) {
    if (g.edge_count() == 0)
        throw NoEdges("invariant report needs at least one edge");
    if (has_isolated_vertex(g))
        throw IsolatedVertex("invariant report rejects graphs with isolated vertices");
    InvariantReport r;
    r.n = g.vertex_count();
    r.connected = is_connected(g);
    r.field = field;
    r.im = induced_matching_number(g);
    r.m = matching_number(g);
    r.reg = regularity_quotient(edge_ideal(g), field);

    HilbertSeries h = hilbert_series_of_complex(independence_complex(g));
    r.dim = h.dpow;
    r.hcoeffs = h.numerator;
    r.s = h.numerator.degree();

    if (!(r.im <= r.reg && r.reg <= r.m))
        throw SandwichViolation("im <= reg <= m violated: im=" + std::to_string(r.im) +
                                " reg=" + std::to_string(r.reg) + " m=" + std::to_string(r.m));
    if (r.hcoeffs.coeff(0) != 1 || r.hcoeffs.at_one() <= 0 || r.s > r.dim)
        throw Error("internal: malformed h-polynomial in invariant report");
    return r;
}

} // namespace ei
