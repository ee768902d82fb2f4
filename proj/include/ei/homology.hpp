#pragma once

#include <vector>

#include "ei/complex.hpp"
#include "ei/field.hpp"

namespace ei {

// Reduced homology ranks indexed from dimension -1, i.e. ranks[k+1] = rank H~_k.
// Over the rationals the ranks come from fraction-free elimination; over F_p
// from elimination mod p. Throws VoidComplex for a complex with no faces.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& field);

// Independent backend: boundary ranks via integer Smith normal form.
// Equals reduced_homology_ranks(..., rationals) on every complex.
std::vector<long long> reduced_homology_ranks_snf(const SimplicialComplex& k);

namespace detail {

struct HomologyScratch {
    std::vector<Vmask> faces;     // scratch face buffer for callers
    std::vector<long long> mat;   // dense matrix buffer
    std::vector<int> offsets;
};

// Low-level entry point shared with the Hochster subset scan. `faces` must be
// sorted by (cardinality, numeric value) and contain the empty face.
void homology_ranks_sorted(const std::vector<Vmask>& faces, const FieldSpec& field,
                           std::vector<long long>& out, HomologyScratch& scratch);

void homology_ranks_sorted_snf(const std::vector<Vmask>& faces, std::vector<long long>& out,
                               HomologyScratch& scratch);

} // namespace detail

} // namespace ei
