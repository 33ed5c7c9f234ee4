#include "ssg/families.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidParametersError(what);
}

/// All k-subsets of {0..n-1} as bitmasks, in colex order.
std::vector<uint32_t> subsets_colex(int n, int k) {
    std::vector<uint32_t> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        uint32_t mask = 0;
        for (int x : pick) mask |= uint32_t{1} << x;
        out.push_back(mask);
        // Next subset in colex: bump the lowest element that can move.
        int i = 0;
        while (i < k && pick[i] + 1 == (i + 1 < k ? pick[i + 1] : n)) ++i;
        if (i == k) break;
        ++pick[i];
        for (int j = 0; j < i; ++j) pick[j] = j;
    }
    if (k == 0) out.assign(1, 0);
    return out;
}

} // namespace

Graph complete_graph(int n) {
    require(n >= 1, "complete: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete_bipartite: need m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph(m + n, edges);
}

Graph path_graph(int n) {
    require(n >= 1, "path: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph prism_graph(int n) {
    require(n >= 3, "prism: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, edges);
}

Graph hypercube_graph(int d) {
    require(d >= 0 && d <= 20, "hypercube: need 0 <= d <= 20");
    const int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < d; ++bit) {
            int v = u ^ (1 << bit);
            if (u < v) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

Graph kneser_graph(int n, int k) {
    require(k >= 1 && 2 * k <= n && n <= 20, "kneser: need 1 <= k and 2k <= n <= 20");
    auto verts = subsets_colex(n, k);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if ((verts[i] & verts[j]) == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(verts.size()), edges);
}

Graph subset_graph(int n, int k, int l) {
    require(0 <= k && k <= l && l <= n && n <= 20, "subset: need 0 <= k <= l <= n <= 20");
    auto small = subsets_colex(n, k);
    auto large = subsets_colex(n, l);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < small.size(); ++i)
        for (size_t j = 0; j < large.size(); ++j)
            if ((small[i] & ~large[j]) == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(small.size() + j));
    return Graph(static_cast<int>(small.size() + large.size()), edges);
}

Graph h_gadget() {
    std::vector<std::pair<int, int>> edges;
    for (int copy : {0, 5}) {
        for (int x : {0, 1})
            for (int y : {2, 3, 4}) edges.emplace_back(copy + x, copy + y);
    }
    edges.emplace_back(2, 7);
    edges.emplace_back(3, 8);
    return Graph(10, edges);
}

Graph triangle_with_pendants() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph random_tree(int n, uint64_t seed) {
    require(n >= 1, "random_tree: need n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});

    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(rng() % n);

    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];

    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            while (degree[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

Graph generate(const FamilySpec& spec) {
    switch (spec.tag) {
        case FamilyTag::Complete: return complete_graph(spec.a);
        case FamilyTag::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case FamilyTag::Path: return path_graph(spec.a);
        case FamilyTag::Cycle: return cycle_graph(spec.a);
        case FamilyTag::Prism: return prism_graph(spec.a);
        case FamilyTag::Hypercube: return hypercube_graph(spec.a);
        case FamilyTag::Kneser: return kneser_graph(spec.a, spec.b);
        case FamilyTag::Subset: return subset_graph(spec.a, spec.b, spec.c);
        case FamilyTag::HGadget: return h_gadget();
        case FamilyTag::TrianglePendants: return triangle_with_pendants();
        case FamilyTag::RandomTree: return random_tree(spec.a, spec.seed);
    }
    throw InvalidParametersError("unknown family tag");
}

} // namespace ssg
