#pragma once

#include <optional>
#include <utility>

#include "ei/algebra.hpp"
#include "ei/graph.hpp"

namespace ei {

// One suspension applied to a graph on n vertices, introducing vertex n+1.
struct SuspensionStep {
    enum class Kind { S, EdgeS };
    Kind kind = Kind::S;
    Vmask s = 0;
    std::optional<std::pair<int, int>> edge; // present iff kind == EdgeS
    int new_vertex = 0;
};

// G plus a new vertex adjacent to every vertex outside the independent set S.
Graph s_suspension(const Graph& g, Vmask s);

// G plus a new vertex adjacent to every vertex outside S ∪ e, where e is an
// edge no member of S is adjacent to.
Graph edge_s_suspension(const Graph& g, std::pair<int, int> e, Vmask s);

// True iff every vertex outside S ∪ e has a neighbor inside S ∪ e. The
// invariant guarantees for the edge suspension are only asserted under this
// hypothesis.
bool check_domination_hypothesis(const Graph& g, std::pair<int, int> e, Vmask s);

// Predicted Hilbert series H + λ/(1-λ)^{|S|+1}, in lowest terms.
HilbertSeries predict_s_suspension(const HilbertSeries& h, int size_s);

// Predicted Hilbert series H + λ(1+λ)/(1-λ)^{|S|+2}, in lowest terms.
HilbertSeries predict_edge_s_suspension(const HilbertSeries& h, int size_s);

} // namespace ei
