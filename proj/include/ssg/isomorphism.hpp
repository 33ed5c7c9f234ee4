#pragma once

#include "ssg/graph.hpp"

namespace ssg {

/// Backtracking isomorphism test for desk-scale graphs (n <= 20).
bool isomorphic(const Graph& a, const Graph& b);

/// Structural test for K_{n,n}, any n.
bool is_balanced_complete_bipartite(const Graph& g);

} // namespace ssg
