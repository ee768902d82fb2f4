#pragma once

#include <string>

#include "ei/constructor.hpp"

namespace ei {

// Graph JSON: {"n": 5, "edges": [[1,2],[2,3],...]} with 1-based labels.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text); // throws ParseError
Graph read_graph_file(const std::string& path); // throws ParseError
void write_graph_file(const Graph& g, const std::string& path);

std::string report_to_json(const InvariantReport& rep);

// Certificate JSON: target {a,r,s}, base, steps[] {kind, S, edge?,
// predicted_h, computed_h}, report, field, seed. Replaying the steps from
// the base graph reproduces the result graph. Output is byte-deterministic.
std::string certificate_to_json(const Certificate& cert);
void write_certificate_file(const Certificate& cert, const std::string& path);
Graph replay_certificate(const std::string& text); // rebuilds the result graph

// Graphviz export with vertex labels x1..xn.
std::string to_dot(const Graph& g);

} // namespace ei
