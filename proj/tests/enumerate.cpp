#include "enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace enumerate {

namespace {

bool mask_adjacent(uint64_t mask, int a, int b) {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return (mask >> pair_bit(a, b)) & 1;
}

/// True when a precedes b lexicographically on the masked bit positions,
/// position 0 being the most significant.
bool lex_less(uint64_t a, uint64_t b, uint64_t mask) {
    uint64_t diff = (a ^ b) & mask;
    if (!diff) return false;
    return !((a >> __builtin_ctzll(diff)) & 1);
}

/// Place original vertices into positions 0, 1, ...; placing position p
/// fixes the bits of column p (pairs (i, p), i < p), which extend the bit
/// prefix. Prune whenever the prefix already exceeds the best.
struct CanonSearch {
    int n;
    uint64_t input;
    uint64_t best;
    std::vector<int> placed; // position -> original vertex
    std::vector<char> used;

    uint64_t column_bits(int p, int candidate) const {
        uint64_t bits = 0;
        for (int i = 0; i < p; ++i)
            if (mask_adjacent(input, placed[i], candidate)) bits |= uint64_t{1} << pair_bit(i, p);
        return bits;
    }

    void dfs(int p, uint64_t prefix) {
        if (p == n) {
            if (lex_less(prefix, best, ~uint64_t{0})) best = prefix;
            return;
        }
        const uint64_t column_mask = (uint64_t{1} << pair_bit(0, p + 1)) - 1;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint64_t next = prefix | column_bits(p, v);
            if (lex_less(best, next, column_mask)) continue;
            placed[p] = v;
            used[v] = 1;
            dfs(p + 1, next);
            used[v] = 0;
        }
    }
};

} // namespace

uint64_t canonical_mask(int n, uint64_t mask) {
    if (n > 9) throw std::runtime_error("canonical_mask limited to n <= 9");
    if (n <= 1) return 0;
    CanonSearch search{n, mask, mask, std::vector<int>(n, -1), std::vector<char>(n, 0)};
    search.dfs(0, 0);
    return search.best;
}

ssg::Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_bit(i, j)) & 1) edges.emplace_back(i, j);
    return ssg::Graph(n, edges);
}

uint64_t mask_from_graph(const ssg::Graph& g) {
    uint64_t mask = 0;
    for (const ssg::Edge& e : g.edges()) mask |= uint64_t{1} << pair_bit(e.u, e.v);
    return mask;
}

bool mask_connected(int n, uint64_t mask) {
    if (n == 0) return false;
    uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y)
            if (!((seen >> y) & 1) && mask_adjacent(mask, x, y)) {
                seen |= uint64_t{1} << y;
                stack.push_back(y);
            }
    }
    return seen == (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
}

namespace {

int mask_degree(int n, uint64_t mask, int v) {
    int d = 0;
    for (int w = 0; w < n; ++w) d += mask_adjacent(mask, v, w);
    return d;
}

/// All graphs on exactly n vertices (including disconnected ones), one per
/// isomorphism class, by vertex augmentation. max_deg < 0 disables the cap.
std::vector<std::set<uint64_t>> all_graphs_by_order(int max_n, int max_deg) {
    std::vector<std::set<uint64_t>> levels(max_n + 1);
    levels[1].insert(0);
    for (int n = 2; n <= max_n; ++n) {
        for (uint64_t base : levels[n - 1]) {
            for (uint64_t subset = 0; subset < (uint64_t{1} << (n - 1)); ++subset) {
                if (max_deg >= 0) {
                    if (__builtin_popcountll(subset) > max_deg) continue;
                    bool overfull = false;
                    for (int w = 0; w < n - 1 && !overfull; ++w)
                        if (((subset >> w) & 1) && mask_degree(n - 1, base, w) + 1 > max_deg)
                            overfull = true;
                    if (overfull) continue;
                }
                uint64_t mask = base;
                for (int w = 0; w < n - 1; ++w)
                    if ((subset >> w) & 1) mask |= uint64_t{1} << pair_bit(w, n - 1);
                levels[n].insert(canonical_mask(n, mask));
            }
        }
    }
    return levels;
}

} // namespace

std::vector<ssg::Graph> connected_graphs_up_to(int max_n) {
    auto levels = all_graphs_by_order(max_n, -1);
    std::vector<ssg::Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (uint64_t mask : levels[n])
            if (mask_connected(n, mask)) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<ssg::Graph> connected_subcubic_graphs(int max_n) {
    auto levels = all_graphs_by_order(max_n, 3);
    std::vector<ssg::Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (uint64_t mask : levels[n])
            if (mask_connected(n, mask)) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<ssg::Graph> connected_graphs_max_edges(int max_m) {
    // Edge augmentation keeps every prefix connected: a new edge either joins
    // two existing vertices or attaches one new vertex.
    std::set<std::pair<int, uint64_t>> seen;
    std::vector<std::pair<int, uint64_t>> frontier;
    auto push = [&](int n, uint64_t mask) {
        auto key = std::make_pair(n, canonical_mask(n, mask));
        if (seen.insert(key).second) frontier.push_back(key);
    };

    std::vector<ssg::Graph> out;
    out.push_back(graph_from_mask(1, 0)); // K_1
    if (max_m == 0) return out;

    push(2, 1);
    size_t head = 0;
    while (head < frontier.size()) {
        auto [n, mask] = frontier[head++];
        int m = __builtin_popcountll(mask);
        if (m >= max_m) continue;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (!((mask >> pair_bit(i, j)) & 1))
                    push(n, mask | (uint64_t{1} << pair_bit(i, j)));
        if (n < 9)
            for (int v = 0; v < n; ++v) push(n + 1, mask | (uint64_t{1} << pair_bit(v, n)));
    }
    for (auto [n, mask] : seen) out.push_back(graph_from_mask(n, mask));
    return out;
}

} // namespace enumerate
