#pragma once

#include <string>

#include "koszul/edge_ring.hpp"
#include "koszul/filtration.hpp"
#include "koszul/graph.hpp"
#include "koszul/ideal.hpp"

namespace koszul {

// JSON wire formats. Keys are emitted in sorted order, so serialization is
// byte-stable across runs.

std::string graph_to_json(const Graph& g);  // {"n": int, "edges": [[i,j],...]}
Graph graph_from_json(const std::string& text);

std::string multidegree_to_json(const Multidegree& a);  // flat array of length n
Multidegree multidegree_from_json(const std::string& text);

std::string ideal_to_json(const MonomialIdeal& I);  // {"n", "unit", "gens"}
MonomialIdeal ideal_from_json(const std::string& text);

std::string toric_relation_to_json(const ToricRelation& r);

std::string report_to_json(const VerificationReport& r);

/// Undirected DOT graph, node labels = vertex numbers, support vertices only.
std::string to_dot(const Graph& g);

/// Monomial as a product of edge variables, e.g. "x(1,5)*x(2,5)"; the empty
/// multidegree prints as "1".
std::string monomial_to_string(const Multidegree& a);

std::string ideal_to_string(const MonomialIdeal& I);

}  // namespace koszul
