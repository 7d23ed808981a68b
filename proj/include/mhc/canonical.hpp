#pragma once

#include <string>

#include "mhc/graph.hpp"

namespace mhc {

// Canonical forms are only supported up to this order; the minimization is
// exponential on highly regular graphs beyond it.
inline constexpr int kCanonicalMaxOrder = 12;

// Canonical byte string: equal strings iff the graphs are isomorphic.
// Implementation: minimum upper-triangle adjacency encoding over vertex
// permutations compatible with an iterated degree-partition refinement,
// returned as the graph6 line of the canonically relabeled graph.
std::string canonical_form(const Graph& g);

// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

}  // namespace mhc
