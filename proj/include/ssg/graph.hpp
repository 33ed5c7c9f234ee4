#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ssg/edge_set.hpp"

namespace ssg {

/// Unordered vertex pair in canonical form (u < v).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/// Immutable simple undirected graph. Edges carry stable ids assigned in
/// lexicographic (u, v) order, so edge sets and colorings are reproducible.
class Graph {
public:
    Graph() = default;

    /// Strict constructor: rejects loops and duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    /// Builds the underlying simple graph of a multigraph edge list:
    /// parallel edges collapse to one, loops are rejected.
    static Graph underlying_simple(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;

    int degree(VertexId v) const;
    int max_degree() const { return max_degree_; }

    const std::vector<VertexId>& neighbors(VertexId v) const;
    const std::vector<EdgeId>& incident_edges(VertexId v) const;

    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
    bool adjacent(VertexId a, VertexId b) const;
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    /// Throws UnknownEdgeError when the pair is not an edge of the graph.
    EdgeId require_edge(VertexId a, VertexId b) const;

    /// N(e): edges sharing exactly one endpoint with e.
    const EdgeSet& edge_neighborhood(EdgeId e) const;
    /// N2(e): edges at distance 1 or 2 from e.
    const EdgeSet& two_edge_neighborhood(EdgeId e) const;
    /// Edges at distance exactly 2 from e.
    const EdgeSet& distance_two_edges(EdgeId e) const;
    /// L(e): edges at distance 2 from e that can never share a color with e
    /// in a semistrong coloring. Some endpoint of e is adjacent to both ends
    /// of the partner, or vice versa; on triangle-free graphs these are
    /// exactly the opposite edges of the 4-cycles through e.
    const EdgeSet& square_partners(EdgeId e) const;

    /// (N_side(e), N2_side(e)): the edges of N(e) incident to `side`, and the
    /// edges of N2(e) reachable from e through `side` by paths of length <= 2.
    std::pair<EdgeSet, EdgeSet> directed_neighborhoods(EdgeId e, VertexId side) const;

    /// Length of a shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

    std::vector<std::vector<VertexId>> components() const;

    EdgeSet empty_edge_set() const { return EdgeSet(edge_count()); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void build_indexes();
    void check_edge_id(EdgeId e) const;

    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<EdgeSet> nbr_;
    std::vector<EdgeSet> two_nbr_;
    std::vector<EdgeSet> dist2_;
    std::vector<EdgeSet> partners_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> vertex_map; // new id -> old id
    std::vector<EdgeId> edge_map;     // new edge id -> old edge id
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices);

} // namespace ssg
