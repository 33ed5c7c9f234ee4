#include "ssg/isomorphism.hpp"

#include <algorithm>
#include <queue>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

std::vector<std::vector<int>> neighbor_degree_signature(const Graph& g) {
    std::vector<std::vector<int>> sig(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId w : g.neighbors(v)) sig[v].push_back(g.degree(w));
        std::sort(sig[v].begin(), sig[v].end());
    }
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b)
        : a_(a), b_(b), sig_a_(neighbor_degree_signature(a)), sig_b_(neighbor_degree_signature(b)),
          image_(a.vertex_count(), -1), used_(b.vertex_count(), 0) {
        // Mapping high-degree vertices first fails sooner.
        order_.resize(a.vertex_count());
        for (VertexId v = 0; v < a.vertex_count(); ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](VertexId x, VertexId y) { return a.degree(x) > a.degree(y); });
    }

    bool run() { return extend(0); }

private:
    bool extend(size_t pos) {
        if (pos == order_.size()) return true;
        VertexId v = order_[pos];
        for (VertexId w = 0; w < b_.vertex_count(); ++w) {
            if (used_[w] || a_.degree(v) != b_.degree(w) || sig_a_[v] != sig_b_[w]) continue;
            bool consistent = true;
            for (size_t i = 0; i < pos && consistent; ++i) {
                VertexId u = order_[i];
                if (a_.adjacent(v, u) != b_.adjacent(w, image_[u])) consistent = false;
            }
            if (!consistent) continue;
            image_[v] = w;
            used_[w] = 1;
            if (extend(pos + 1)) return true;
            used_[w] = 0;
            image_[v] = -1;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<std::vector<int>> sig_a_, sig_b_;
    std::vector<VertexId> order_;
    std::vector<VertexId> image_;
    std::vector<char> used_;
};

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > 20 || b.vertex_count() > 20)
        throw InvalidParametersError("isomorphism check is limited to n <= 20");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;

    auto sig = [](const Graph& g) {
        auto s = neighbor_degree_signature(g);
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sig(a) != sig(b)) return false;

    return IsoSearch(a, b).run();
}

bool is_balanced_complete_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || n % 2 != 0) return false;
    const int half = n / 2;
    if (g.edge_count() != half * half) return false;

    // 2-color by BFS; completeness then follows from the degrees.
    std::vector<int> side(n, -1);
    std::queue<VertexId> q;
    side[0] = 0;
    q.push(0);
    int visited = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : g.neighbors(x)) {
            if (side[y] == -1) {
                side[y] = 1 - side[x];
                q.push(y);
                ++visited;
            } else if (side[y] == side[x]) {
                return false;
            }
        }
    }
    if (visited != n) return false;
    int zeros = static_cast<int>(std::count(side.begin(), side.end(), 0));
    if (zeros != half) return false;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != half) return false;
    return true;
}

} // namespace ssg
