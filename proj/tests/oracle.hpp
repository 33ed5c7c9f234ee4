#pragma once

// Independent brute-force oracles for expected values. Everything here works
// from the definitions directly (explicit induced subgraphs, vertex BFS,
// exhaustive enumeration) and shares no search machinery with the library.

#include <optional>
#include <vector>

#include "ssg/coloring.hpp"
#include "ssg/graph.hpp"
#include "ssg/matching.hpp"

namespace oracle {

using ssg::EdgeId;
using ssg::Graph;
using ssg::VertexId;

/// Vertex distances by BFS.
std::vector<int> vertex_distances(const Graph& g, VertexId from);

/// Edge distance = 1 + min vertex distance between endpoints (0 for e == f).
int edge_distance(const Graph& g, EdgeId e, EdgeId f);

std::vector<EdgeId> edges_at_distance(const Graph& g, EdgeId e, int d);
std::vector<EdgeId> edges_within_distance(const Graph& g, EdgeId e, int d);

/// Edges of the subgraph induced by the endpoints of `members`.
std::vector<EdgeId> induced_edges(const Graph& g, const std::vector<EdgeId>& members);

/// Literal matching-kind test from the definitions.
bool is_kind_matching(const Graph& g, const std::vector<EdgeId>& members, ssg::MatchingKind kind);

/// Exhaustive 2^m maximum matching (m <= 25 guard).
int max_matching_size(const Graph& g, ssg::MatchingKind kind);

/// Literal coloring check from the definitions.
bool coloring_ok(const Graph& g, const std::vector<int>& colors, ssg::ColoringKind kind);

/// Naive backtracking feasibility: colors tried in edge-id order with the
/// literal class check, no ordering heuristics, no symmetry breaking.
bool feasible(const Graph& g, int k, ssg::ColoringKind kind);

int chromatic_index(const Graph& g, ssg::ColoringKind kind);

/// Shortest cycle by per-edge-removal BFS; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Brute-force system of distinct representatives.
bool sdr_exists(const std::vector<std::vector<int>>& sets);

/// All 4-cycles as edge-id quadruples (each cycle once).
std::vector<std::array<EdgeId, 4>> four_cycles(const Graph& g);

} // namespace oracle
