#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<int> vertex_distances(const Graph& g, VertexId from) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<VertexId> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : g.neighbors(x))
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

int edge_distance(const Graph& g, EdgeId e, EdgeId f) {
    if (e == f) return 0;
    auto du = vertex_distances(g, g.edges()[e].u);
    auto dv = vertex_distances(g, g.edges()[e].v);
    const auto [x, y] = g.edges()[f];
    int best = -1;
    for (int d : {du[x], du[y], dv[x], dv[y]})
        if (d >= 0 && (best == -1 || d < best)) best = d;
    return best == -1 ? -1 : best + 1; // -1: different components
}

std::vector<EdgeId> edges_at_distance(const Graph& g, EdgeId e, int d) {
    std::vector<EdgeId> out;
    for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (f != e && edge_distance(g, e, f) == d) out.push_back(f);
    return out;
}

std::vector<EdgeId> edges_within_distance(const Graph& g, EdgeId e, int d) {
    std::vector<EdgeId> out;
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        int dist = edge_distance(g, e, f);
        if (dist >= 1 && dist <= d) out.push_back(f);
    }
    return out;
}

std::vector<EdgeId> induced_edges(const Graph& g, const std::vector<EdgeId>& members) {
    std::set<VertexId> verts;
    for (EdgeId e : members) {
        verts.insert(g.edges()[e].u);
        verts.insert(g.edges()[e].v);
    }
    std::vector<EdgeId> out;
    for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (verts.count(g.edges()[f].u) && verts.count(g.edges()[f].v)) out.push_back(f);
    return out;
}

namespace {

bool pairwise_disjoint(const Graph& g, const std::vector<EdgeId>& members) {
    std::set<VertexId> verts;
    for (EdgeId e : members) {
        if (!verts.insert(g.edges()[e].u).second) return false;
        if (!verts.insert(g.edges()[e].v).second) return false;
    }
    return true;
}

int induced_degree(const Graph& g, const std::vector<EdgeId>& induced, VertexId v) {
    int d = 0;
    for (EdgeId f : induced) d += g.edges()[f].u == v || g.edges()[f].v == v;
    return d;
}

/// Repeated min-degree peeling directly on the induced edge list.
bool induced_is_r_degenerate(const Graph& g, const std::vector<EdgeId>& members, int r) {
    std::set<VertexId> verts;
    for (EdgeId e : members) {
        verts.insert(g.edges()[e].u);
        verts.insert(g.edges()[e].v);
    }
    std::vector<EdgeId> live = induced_edges(g, members);
    std::set<VertexId> alive = verts;
    while (!alive.empty()) {
        VertexId pick = -1;
        int best = -1;
        for (VertexId v : alive) {
            int d = 0;
            for (EdgeId f : live) d += g.edges()[f].u == v || g.edges()[f].v == v;
            if (best == -1 || d < best) {
                best = d;
                pick = v;
            }
        }
        if (best > r) return false;
        alive.erase(pick);
        std::erase_if(live,
                      [&](EdgeId f) { return g.edges()[f].u == pick || g.edges()[f].v == pick; });
    }
    return true;
}

} // namespace

bool is_kind_matching(const Graph& g, const std::vector<EdgeId>& members, ssg::MatchingKind kind) {
    if (!pairwise_disjoint(g, members)) return false;
    switch (kind.tag) {
        case ssg::MatchingKind::Tag::Plain: return true;
        case ssg::MatchingKind::Tag::Induced: {
            auto induced = induced_edges(g, members);
            std::vector<EdgeId> sorted = members;
            std::sort(sorted.begin(), sorted.end());
            return induced == sorted;
        }
        case ssg::MatchingKind::Tag::Semistrong: {
            auto induced = induced_edges(g, members);
            for (EdgeId e : members) {
                int du = induced_degree(g, induced, g.edges()[e].u);
                int dv = induced_degree(g, induced, g.edges()[e].v);
                if (du != 1 && dv != 1) return false;
            }
            return true;
        }
        case ssg::MatchingKind::Tag::Degenerate:
            return induced_is_r_degenerate(g, members, kind.r);
    }
    return false;
}

int max_matching_size(const Graph& g, ssg::MatchingKind kind) {
    const int m = g.edge_count();
    if (m > 25) throw std::runtime_error("oracle max_matching_size limited to 25 edges");
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        std::vector<EdgeId> members;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) members.push_back(e);
        if (static_cast<int>(members.size()) > best && is_kind_matching(g, members, kind))
            best = static_cast<int>(members.size());
    }
    return best;
}

bool coloring_ok(const Graph& g, const std::vector<int>& colors, ssg::ColoringKind kind) {
    const int m = g.edge_count();
    if (kind.tag == ssg::ColoringKind::Tag::Relaxed) {
        for (EdgeId e = 0; e < m; ++e) {
            int adj = 0, far = 0;
            for (EdgeId f = 0; f < m; ++f) {
                if (f == e || colors[f] != colors[e]) continue;
                int d = edge_distance(g, e, f);
                adj += d == 1;
                far += d == 2;
            }
            if (adj > kind.s || far > kind.t) return false;
        }
        return true;
    }
    int maxc = 0;
    for (int c : colors) maxc = std::max(maxc, c);
    for (int c = 1; c <= maxc; ++c) {
        std::vector<EdgeId> members;
        for (EdgeId e = 0; e < m; ++e)
            if (colors[e] == c) members.push_back(e);
        if (!is_kind_matching(g, members, *kind.class_kind())) return false;
    }
    return true;
}

namespace {

bool extend_coloring(const Graph& g, std::vector<int>& colors, EdgeId e, int k,
                     ssg::ColoringKind kind) {
    if (e == g.edge_count()) return true;
    for (int c = 1; c <= k; ++c) {
        colors[e] = c;
        // Check only what the new assignment touches: for class kinds the
        // whole class of c among edges 0..e, for relaxed the counts on the
        // assigned prefix.
        bool ok = true;
        if (kind.tag == ssg::ColoringKind::Tag::Relaxed) {
            for (EdgeId a = 0; a <= e && ok; ++a) {
                if (colors[a] != c) continue;
                int adj = 0, far = 0;
                for (EdgeId b = 0; b <= e; ++b) {
                    if (b == a || colors[b] != c) continue;
                    int d = edge_distance(g, a, b);
                    adj += d == 1;
                    far += d == 2;
                }
                if (adj > kind.s || far > kind.t) ok = false;
            }
        } else {
            std::vector<EdgeId> members;
            for (EdgeId a = 0; a <= e; ++a)
                if (colors[a] == c) members.push_back(a);
            ok = is_kind_matching(g, members, *kind.class_kind());
        }
        if (ok && extend_coloring(g, colors, e + 1, k, kind)) return true;
        colors[e] = 0;
    }
    return false;
}

} // namespace

bool feasible(const Graph& g, int k, ssg::ColoringKind kind) {
    std::vector<int> colors(g.edge_count(), 0);
    return extend_coloring(g, colors, 0, k, kind);
}

int chromatic_index(const Graph& g, ssg::ColoringKind kind) {
    if (g.edge_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (feasible(g, k, kind)) return k;
}

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        // Shortest cycle through e = that edge plus a shortest u-v path avoiding it.
        const auto [u, v] = g.edges()[e];
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<VertexId> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            for (VertexId y : g.neighbors(x)) {
                if (x == u && y == v) continue;
                if (x == v && y == u) continue;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        if (dist[v] >= 0 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
    }
    return best;
}

namespace {

bool sdr_extend(const std::vector<std::vector<int>>& sets, size_t i, std::set<int>& used) {
    if (i == sets.size()) return true;
    for (int c : sets[i]) {
        if (used.count(c)) continue;
        used.insert(c);
        if (sdr_extend(sets, i + 1, used)) return true;
        used.erase(c);
    }
    return false;
}

} // namespace

bool sdr_exists(const std::vector<std::vector<int>>& sets) {
    std::set<int> used;
    return sdr_extend(sets, 0, used);
}

std::vector<std::array<EdgeId, 4>> four_cycles(const Graph& g) {
    std::vector<std::array<EdgeId, 4>> out;
    const int n = g.vertex_count();
    // Cycle a-b-c-d with a the smallest vertex and b < d.
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b : g.neighbors(a)) {
            if (b <= a) continue;
            for (VertexId c : g.neighbors(b)) {
                if (c <= a || c == b) continue;
                for (VertexId d : g.neighbors(c)) {
                    if (d <= b || d == a || d == b || d == c) continue;
                    if (!g.adjacent(d, a)) continue;
                    out.push_back({*g.find_edge(a, b), *g.find_edge(b, c), *g.find_edge(c, d),
                                   *g.find_edge(d, a)});
                }
            }
        }
    return out;
}

} // namespace oracle
