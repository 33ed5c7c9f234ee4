#pragma once

// Exhaustive small-graph corpora, one representative per isomorphism class.
// Canonical form = lexicographically smallest column-major upper-triangle
// bitmask over all vertex permutations (branch-and-prune).

#include <cstdint>
#include <vector>

#include "ssg/graph.hpp"

namespace enumerate {

/// Upper-triangle bit for pair (i, j), i < j — same layout as graph6.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

uint64_t canonical_mask(int n, uint64_t mask);

ssg::Graph graph_from_mask(int n, uint64_t mask);
uint64_t mask_from_graph(const ssg::Graph& g);
bool mask_connected(int n, uint64_t mask);

/// All connected graphs with n vertices, 1 <= n <= max_n (max_n <= 8).
std::vector<ssg::Graph> connected_graphs_up_to(int max_n);

/// All connected graphs with at most max_m edges (max_m <= 8), any order.
std::vector<ssg::Graph> connected_graphs_max_edges(int max_m);

/// All connected graphs with max degree <= 3 and n <= max_n (max_n <= 8).
std::vector<ssg::Graph> connected_subcubic_graphs(int max_n);

} // namespace enumerate
