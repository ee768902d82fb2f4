#pragma once

#include <cstddef>
#include <vector>

#include "ei/graph.hpp"

namespace ei {

// f[i] = number of faces of cardinality i, so f[0] = 1 counts the empty face.
struct FVector {
    std::vector<long long> f;
    bool operator==(const FVector&) const = default;
};

// A simplicial complex stored as its full face list, sorted by
// (cardinality, numeric mask value). Always contains the empty face.
class SimplicialComplex {
public:
    static SimplicialComplex from_faces(int ground, std::vector<Vmask> faces);
    static SimplicialComplex from_facets(int ground, const std::vector<Vmask>& facets);

    int ground() const { return ground_; }
    const std::vector<Vmask>& faces() const { return faces_; }
    int dimension() const; // -1 for the complex {∅}

private:
    int ground_ = 0;
    std::vector<Vmask> faces_;
};

constexpr std::size_t kDefaultFaceBound = std::size_t{1} << 24;

SimplicialComplex independence_complex(const Graph& g,
                                       std::size_t max_faces = kDefaultFaceBound);

FVector f_vector(const SimplicialComplex& k);

} // namespace ei
