#include "ssg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

Edge canonical(int a, int b) {
    if (a > b) std::swap(a, b);
    return Edge{a, b};
}

void check_endpoints(int n, int a, int b) {
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw UnknownVertexError("edge endpoint out of range: (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ") with n = " + std::to_string(n));
    if (a == b) throw LoopEdgeError("loop edge at vertex " + std::to_string(a));
}

} // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw InvalidParametersError("negative vertex count");
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        check_endpoints(n, a, b);
        edges_.push_back(canonical(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->u) + ", " +
                                 std::to_string(dup->v) + ")");
    build_indexes();
}

Graph Graph::underlying_simple(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::set<Edge> seen;
    for (auto [a, b] : pairs) {
        check_endpoints(n, a, b);
        seen.insert(canonical(a, b));
    }
    std::vector<std::pair<int, int>> dedup;
    dedup.reserve(seen.size());
    for (const Edge& e : seen) dedup.emplace_back(e.u, e.v);
    return Graph(n, dedup);
}

void Graph::build_indexes() {
    const int m = edge_count();
    adj_.assign(n_, {});
    incident_.assign(n_, {});
    for (EdgeId e = 0; e < m; ++e) {
        adj_[edges_[e].u].push_back(edges_[e].v);
        adj_[edges_[e].v].push_back(edges_[e].u);
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
    }
    max_degree_ = 0;
    for (VertexId v = 0; v < n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
    }

    nbr_.assign(m, EdgeSet(m));
    two_nbr_.assign(m, EdgeSet(m));
    dist2_.assign(m, EdgeSet(m));
    partners_.assign(m, EdgeSet(m));
    for (EdgeId e = 0; e < m; ++e) {
        const auto [u, v] = edges_[e];
        EdgeSet& nb = nbr_[e];
        for (EdgeId f : incident_[u])
            if (f != e) nb.insert(f);
        for (EdgeId f : incident_[v])
            if (f != e) nb.insert(f);

        EdgeSet& d2 = dist2_[e];
        for (VertexId mid : {u, v}) {
            for (VertexId w : adj_[mid]) {
                if (w == u || w == v) continue;
                for (EdgeId f : incident_[w]) {
                    const auto [x, y] = edges_[f];
                    if (x == u || x == v || y == u || y == v) continue;
                    d2.insert(f);
                }
            }
        }
        two_nbr_[e] = nb | d2;

        EdgeSet& lp = partners_[e];
        d2.for_each([&](EdgeId f) {
            const auto [x, y] = edges_[f];
            const bool e_hit = (adjacent(u, x) || adjacent(u, y)) && (adjacent(v, x) || adjacent(v, y));
            const bool f_hit = (adjacent(x, u) || adjacent(x, v)) && (adjacent(y, u) || adjacent(y, v));
            if (e_hit || f_hit) lp.insert(f);
        });
    }
}

const Edge& Graph::edge(EdgeId e) const {
    check_edge_id(e);
    return edges_[e];
}

void Graph::check_edge_id(EdgeId e) const {
    if (e < 0 || e >= edge_count())
        throw UnknownEdgeError("edge id " + std::to_string(e) + " out of range");
}

int Graph::degree(VertexId v) const {
    if (!has_vertex(v)) throw UnknownVertexError("vertex " + std::to_string(v) + " out of range");
    return static_cast<int>(adj_[v].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    if (!has_vertex(v)) throw UnknownVertexError("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

const std::vector<EdgeId>& Graph::incident_edges(VertexId v) const {
    if (!has_vertex(v)) throw UnknownVertexError("vertex " + std::to_string(v) + " out of range");
    return incident_[v];
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    const auto& na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    const VertexId probe = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(na.begin(), na.end(), probe);
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return std::nullopt;
    Edge target = canonical(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), target);
    if (it != edges_.end() && *it == target)
        return static_cast<EdgeId>(it - edges_.begin());
    return std::nullopt;
}

EdgeId Graph::require_edge(VertexId a, VertexId b) const {
    auto e = find_edge(a, b);
    if (!e)
        throw UnknownEdgeError("(" + std::to_string(a) + ", " + std::to_string(b) +
                               ") is not an edge of the graph");
    return *e;
}

const EdgeSet& Graph::edge_neighborhood(EdgeId e) const {
    check_edge_id(e);
    return nbr_[e];
}

const EdgeSet& Graph::two_edge_neighborhood(EdgeId e) const {
    check_edge_id(e);
    return two_nbr_[e];
}

const EdgeSet& Graph::distance_two_edges(EdgeId e) const {
    check_edge_id(e);
    return dist2_[e];
}

const EdgeSet& Graph::square_partners(EdgeId e) const {
    check_edge_id(e);
    return partners_[e];
}

std::pair<EdgeSet, EdgeSet> Graph::directed_neighborhoods(EdgeId e, VertexId side) const {
    check_edge_id(e);
    const auto [u, v] = edges_[e];
    if (side != u && side != v)
        throw SideNotEndpointError("vertex " + std::to_string(side) + " is not an endpoint of edge " +
                                   std::to_string(e));
    const VertexId other = side == u ? v : u;

    EdgeSet near(edge_count());
    for (EdgeId f : incident_[side])
        if (f != e) near.insert(f);

    // Paths of length <= 2 from e through `side`: edges at `side` plus edges
    // meeting some edge side-w with w != other.
    EdgeSet wide = near;
    for (VertexId w : adj_[side]) {
        if (w == other) continue;
        for (EdgeId f : incident_[w])
            if (f != e) wide.insert(f);
    }
    return {near, wide};
}

std::optional<int> Graph::girth() const {
    const int inf = 1 << 29;
    int best = inf;
    std::vector<int> dist(n_), parent_edge(n_);
    for (VertexId root = 0; root < n_; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::queue<VertexId> bfs;
        dist[root] = 0;
        bfs.push(root);
        while (!bfs.empty()) {
            VertexId x = bfs.front();
            bfs.pop();
            if (2 * dist[x] >= best) continue;
            for (EdgeId f : incident_[x]) {
                VertexId y = edges_[f].u == x ? edges_[f].v : edges_[f].u;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = f;
                    bfs.push(y);
                } else if (f != parent_edge[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == inf) return std::nullopt;
    return best;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId root = 0; root < n_; ++root) {
        if (comp[root] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<VertexId> bfs;
        comp[root] = id;
        bfs.push(root);
        while (!bfs.empty()) {
            VertexId x = bfs.front();
            bfs.pop();
            out[id].push_back(x);
            for (VertexId y : adj_[x]) {
                if (comp[y] == -1) {
                    comp[y] = id;
                    bfs.push(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices) {
    std::vector<int> old_to_new(g.vertex_count(), -1);
    std::vector<VertexId> vmap = vertices;
    std::sort(vmap.begin(), vmap.end());
    for (size_t i = 0; i < vmap.size(); ++i) {
        if (vmap[i] < 0 || vmap[i] >= g.vertex_count())
            throw UnknownVertexError("induced subgraph vertex out of range");
        if (i > 0 && vmap[i] == vmap[i - 1])
            throw InvalidParametersError("duplicate vertex in induced subgraph");
        old_to_new[vmap[i]] = static_cast<int>(i);
    }

    std::vector<std::pair<int, int>> sub_edges;
    std::vector<EdgeId> edge_map;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edges()[e];
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0) {
            sub_edges.emplace_back(old_to_new[u], old_to_new[v]);
            edge_map.push_back(e);
        }
    }
    // Edges inherit lexicographic order from the parent, so ids stay aligned.
    return InducedSubgraph{Graph(static_cast<int>(vmap.size()), sub_edges), vmap, edge_map};
}

} // namespace ssg
