#pragma once

#include "ei/algebra.hpp"
#include "ei/graph.hpp"

namespace ei {

struct InvariantReport {
    int n = 0;
    bool connected = false;
    int im = 0;   // induced matching number
    int m = 0;    // matching number
    int reg = 0;  // reg(R/I(G))
    int dim = 0;  // Krull dimension = independence number
    IntegerPolynomial hcoeffs;
    int s = 0;    // deg h
    FieldSpec field;

    bool operator==(const InvariantReport&) const = default;
};

SquarefreeMonomialIdeal edge_ideal(const Graph& g);

int matching_number(const Graph& g);
int induced_matching_number(const Graph& g);
bool is_gap_free(const Graph& g);

InvariantReport invariant_report(const Graph& g, const FieldSpec& field);

} // namespace ei
