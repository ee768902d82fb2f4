#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "ei/errors.hpp"

namespace ei {

// Vertex sets are bitmasks: vertex v (1-based, v <= 62) occupies bit v-1.
using Vmask = std::uint64_t;

constexpr int kMaxVertices = 62;

inline Vmask vbit(int v) { return Vmask{1} << (v - 1); }
inline bool vhas(Vmask m, int v) { return (m >> (v - 1)) & 1; }
inline int vcount(Vmask m) { return std::popcount(m); }
inline int vlowest(Vmask m) { return std::countr_zero(m) + 1; } // smallest member

std::vector<int> vmembers(Vmask m);
Vmask vmask_of(const std::vector<int>& members);

// Lexicographic order on the increasing member lists, e.g. {1,4} < {2,3}.
bool lex_less(Vmask a, Vmask b);

class Graph {
public:
    Graph() = default;

    // Builds a graph on vertices 1..n. Edges are deduplicated and stored
    // in canonical sorted order. Throws CapacityExceeded / InvalidEdge.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Vmask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    Vmask vertex_mask() const { return n_ == 0 ? 0 : (~Vmask{0} >> (64 - n_)); }
    bool has_edge(int i, int j) const { return vhas(adj_[static_cast<std::size_t>(i)], j); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Vmask> adj_; // adj_[v], index 0 unused
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels; // labels[i] = original label of new vertex i+1
};

InducedSubgraph induced_subgraph(const Graph& g, Vmask w);

bool is_independent(const Graph& g, Vmask s);
int independence_number(const Graph& g);

// All independent sets of size exactly k, in lexicographic order.
std::vector<Vmask> independent_sets_of_size(const Graph& g, int k);

// Lexicographically least independent set of size k; throws InvalidParameter
// if none exists.
Vmask least_independent_set(const Graph& g, int k);

Graph disjoint_union(const std::vector<Graph>& parts);

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

} // namespace ei
