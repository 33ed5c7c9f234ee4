#include "ssg/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ssg/errors.hpp"
#include "ssg/solver.hpp"

namespace ssg {

namespace {

int count_color(const Graph& g, const std::vector<int>& color, const EdgeSet& set, int c) {
    int n = 0;
    set.for_each([&](EdgeId f) { n += color[f] == c; });
    return n;
}

} // namespace

DescentResult semistrong_delta_squared(const Graph& g) {
    const int m = g.edge_count();
    DescentResult res;
    if (m == 0) {
        res.coloring = EdgeColoring(0, 0);
        return res;
    }
    const int delta = g.max_degree();
    const int palette = delta * delta;

    std::vector<EdgeSet> avoid; // N(e) U L(e)
    avoid.reserve(m);
    for (EdgeId e = 0; e < m; ++e) avoid.push_back(g.edge_neighborhood(e) | g.square_partners(e));

    // Greedy pass, hardest edges first.
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        if (avoid[a].size() != avoid[b].size()) return avoid[a].size() > avoid[b].size();
        return a < b;
    });
    std::vector<int> color(m, 0);
    for (EdgeId e : order) {
        int c = 1;
        while (c <= palette && count_color(g, color, avoid[e], c)) ++c;
        if (c > palette)
            throw InternalInvariantError("greedy pass ran out of colors at edge " + std::to_string(e));
        color[e] = c;
    }

    // conflicts[e] = same-colored edges at distance exactly 2 from e.
    std::vector<int> conflicts(m, 0);
    for (EdgeId e = 0; e < m; ++e) conflicts[e] = count_color(g, color, g.distance_two_edges(e), color[e]);
    int iota = std::accumulate(conflicts.begin(), conflicts.end(), 0) / 2;

    const int step_limit = m * m + 1;
    for (int step = 0; step < step_limit; ++step) {
        EdgeId worst = -1;
        for (EdgeId e = 0; e < m; ++e)
            if (conflicts[e] >= 2 && (worst == -1 || conflicts[e] > conflicts[worst])) worst = e;
        if (worst == -1) break;

        // A color outside N(e) U L(e) used at most once at distance 2.
        const EdgeSet& d2 = g.distance_two_edges(worst);
        int chosen = 0;
        for (int c = 1; c <= palette; ++c) {
            if (count_color(g, color, avoid[worst], c)) continue;
            if (count_color(g, color, d2, c) <= 1) {
                chosen = c;
                break;
            }
        }
        if (chosen == 0)
            throw InternalInvariantError("no admissible recoloring for edge " + std::to_string(worst));

        const int old = color[worst];
        const int before = conflicts[worst];
        d2.for_each([&](EdgeId f) {
            if (color[f] == old) --conflicts[f];
            if (color[f] == chosen) ++conflicts[f];
        });
        color[worst] = chosen;
        conflicts[worst] = count_color(g, color, d2, chosen);
        const int new_iota = iota - before + conflicts[worst];
        if (new_iota >= iota)
            throw InternalInvariantError("distance-2 conflict count failed to decrease");
        res.trace.push_back(DescentStep{worst, old, chosen, iota, new_iota});
        iota = new_iota;
    }
    for (EdgeId e = 0; e < m; ++e)
        if (conflicts[e] >= 2)
            throw InternalInvariantError("descent terminated with an over-conflicted edge");

    res.coloring = EdgeColoring(m, palette);
    for (EdgeId e = 0; e < m; ++e) res.coloring.assign(e, color[e]);
    return res;
}

namespace {

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && g.components().size() == 1;
}

VertexId centroid(const Graph& g) {
    const int n = g.vertex_count();
    // Subtree sizes from an arbitrary root; the centroid minimizes the
    // largest remaining component after removal.
    std::vector<int> parent(n, -1), bfs_order;
    std::vector<char> seen(n, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        bfs_order.push_back(x);
        for (VertexId y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                q.push(y);
            }
    }
    std::vector<int> size(n, 1);
    for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    VertexId best = 0;
    int best_load = n + 1;
    for (VertexId v = 0; v < n; ++v) {
        int load = n - size[v];
        for (VertexId y : g.neighbors(v))
            if (parent[y] == v) load = std::max(load, size[y]);
        if (load < best_load) {
            best_load = load;
            best = v;
        }
    }
    return best;
}

int tree_diameter(const Graph& g) {
    auto far = [&](VertexId from) {
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<VertexId> q;
        q.push(from);
        dist[from] = 0;
        VertexId last = from;
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            last = x;
            for (VertexId y : g.neighbors(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
        }
        return std::pair{last, dist[last]};
    };
    auto [a, _] = far(0);
    return far(a).second;
}

/// Top-down greedy pass from the root; fails (returns empty) when some edge
/// has no color that keeps every touched class semistrong.
std::optional<std::vector<int>> tree_greedy(const Graph& g, VertexId root, int palette) {
    std::vector<int> color(g.edge_count(), 0);
    std::vector<detail::ClassState> classes;
    for (int c = 0; c <= palette; ++c) classes.emplace_back(g);

    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : g.neighbors(x)) {
            if (seen[y]) continue;
            seen[y] = 1;
            q.push(y);
            EdgeId e = g.require_edge(x, y);
            int c = 1;
            while (c <= palette && !classes[c].extension_ok(e, MatchingKind::semistrong())) ++c;
            if (c > palette) return std::nullopt;
            color[e] = c;
            classes[c].add(e);
        }
    }
    return color;
}

} // namespace

EdgeColoring tree_semistrong(const Graph& t) {
    if (t.vertex_count() == 0 || !is_tree(t)) throw NotATreeError("input is not a tree");
    if (t.edge_count() == 0) return EdgeColoring(0, 0);

    const int delta = t.max_degree();
    const VertexId root = centroid(t);

    auto finish = [&](const std::vector<int>& color, int palette) {
        EdgeColoring out(t.edge_count(), palette);
        for (EdgeId e = 0; e < t.edge_count(); ++e) out.assign(e, color[e]);
        return out;
    };

    if (auto color = tree_greedy(t, root, delta)) return finish(*color, delta);

    const SearchBudget generous{1'000'000'000, 3600.0, true};
    if (tree_diameter(t) <= 4) {
        auto exact = feasible(t, delta, ColoringKind::semistrong(), generous);
        if (exact.status != FeasibleStatus::Found)
            throw InternalInvariantError("diameter <= 4 tree rejected max_degree colors");
        return *exact.coloring;
    }

    if (auto color = tree_greedy(t, root, delta + 1)) return finish(*color, delta + 1);
    auto exact = feasible(t, delta + 1, ColoringKind::semistrong(), generous);
    if (exact.status != FeasibleStatus::Found)
        throw InternalInvariantError("tree rejected max_degree + 1 colors");
    return *exact.coloring;
}

} // namespace ssg
