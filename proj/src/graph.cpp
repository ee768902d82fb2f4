#include "ei/graph.hpp"

#include <algorithm>
#include <string>

namespace ei {

std::vector<int> vmembers(Vmask m) {
    std::vector<int> out;
    while (m) {
        int v = vlowest(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

Vmask vmask_of(const std::vector<int>& members) {
    Vmask m = 0;
    for (int v : members) {
        if (v < 1 || v > kMaxVertices)
            throw InvalidVertex("vertex label out of range: " + std::to_string(v));
        m |= vbit(v);
    }
    return m;
}

bool lex_less(Vmask a, Vmask b) {
    while (a && b) {
        int la = vlowest(a);
        int lb = vlowest(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b; // proper prefix comes first
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityExceeded("vertex count " + std::to_string(n) + " exceeds capacity " +
                               std::to_string(kMaxVertices));
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw InvalidEdge("edge endpoint out of range: {" + std::to_string(i) + "," +
                              std::to_string(j) + "}");
        if (i == j)
            throw InvalidEdge("loop rejected: {" + std::to_string(i) + "," + std::to_string(j) + "}");
        if (i > j) std::swap(i, j);
        canon.emplace_back(i, j);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    g.edges_ = std::move(canon);
    for (auto [i, j] : g.edges_) {
        g.adj_[static_cast<std::size_t>(i)] |= vbit(j);
        g.adj_[static_cast<std::size_t>(j)] |= vbit(i);
    }
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, Vmask w) {
    if (w & ~g.vertex_mask())
        throw InvalidVertex("induced_subgraph: vertex outside 1..n");
    std::vector<int> labels = vmembers(w);
    std::vector<int> newlabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        newlabel[static_cast<std::size_t>(labels[i])] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g.edges())
        if (vhas(w, i) && vhas(w, j))
            edges.emplace_back(newlabel[static_cast<std::size_t>(i)],
                               newlabel[static_cast<std::size_t>(j)]);
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(labels.size()), edges);
    out.labels = std::move(labels);
    return out;
}

bool is_independent(const Graph& g, Vmask s) {
    if (s & ~g.vertex_mask())
        throw InvalidVertex("is_independent: vertex outside 1..n");
    for (Vmask m = s; m;) {
        int v = vlowest(m);
        m &= m - 1;
        if (g.neighbors(v) & s) return false;
    }
    return true;
}

namespace {

// Enumerates independent sets in lexicographic order of member lists.
// Choosing the smallest remaining vertex first yields exactly that order.
template <class Fn>
bool enumerate_independent_rec(const Graph& g, Vmask chosen, Vmask candidates, int k, Fn&& emit) {
    if (k == 0) return emit(chosen);
    if (vcount(candidates) < k) return true;
    while (candidates) {
        int v = vlowest(candidates);
        candidates &= candidates - 1;
        if (vcount(candidates) + 1 < k) return true;
        Vmask next = candidates & ~g.neighbors(v);
        if (!enumerate_independent_rec(g, chosen | vbit(v), next, k - 1, emit)) return false;
    }
    return true;
}

} // namespace

int independence_number(const Graph& g) {
    int n = g.vertex_count();
    for (int k = n; k >= 1; --k) {
        bool found = false;
        enumerate_independent_rec(g, 0, g.vertex_mask(), k, [&](Vmask) {
            found = true;
            return false; // stop after the first witness
        });
        if (found) return k;
    }
    return 0;
}

std::vector<Vmask> independent_sets_of_size(const Graph& g, int k) {
    if (k < 0 || k > g.vertex_count())
        throw InvalidParameter("independent set size out of range: " + std::to_string(k));
    std::vector<Vmask> out;
    enumerate_independent_rec(g, 0, g.vertex_mask(), k, [&](Vmask s) {
        out.push_back(s);
        return true;
    });
    return out;
}

Vmask least_independent_set(const Graph& g, int k) {
    if (k < 0 || k > g.vertex_count())
        throw InvalidParameter("independent set size out of range: " + std::to_string(k));
    Vmask result = 0;
    bool found = false;
    enumerate_independent_rec(g, 0, g.vertex_mask(), k, [&](Vmask s) {
        result = s;
        found = true;
        return false;
    });
    if (!found)
        throw InvalidParameter("no independent set of size " + std::to_string(k));
    return result;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty())
        throw InvalidParameter("disjoint_union: empty part list");
    int total = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph& p : parts) {
        for (auto [i, j] : p.edges())
            edges.emplace_back(i + total, j + total);
        total += p.vertex_count();
        if (total > kMaxVertices)
            throw CapacityExceeded("disjoint_union: " + std::to_string(total) + " vertices");
    }
    return Graph::from_edges(total, edges);
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1)
        throw InvalidParameter("is_connected: empty graph");
    Vmask seen = vbit(1);
    Vmask frontier = seen;
    while (frontier) {
        Vmask next = 0;
        while (frontier) {
            int v = vlowest(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == g.vertex_mask();
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.neighbors(v) == 0) return true;
    return false;
}

} // namespace ei
