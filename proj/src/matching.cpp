#include "ssg/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

MatchingKind MatchingKind::degenerate(int r) {
    if (r < 0) throw InvalidParametersError("degenerate matching needs r >= 0");
    return {Tag::Degenerate, r};
}

std::string to_string(MatchingKind kind) {
    switch (kind.tag) {
        case MatchingKind::Tag::Plain: return "plain";
        case MatchingKind::Tag::Induced: return "induced";
        case MatchingKind::Tag::Semistrong: return "semistrong";
        case MatchingKind::Tag::Degenerate: return "degenerate:" + std::to_string(kind.r);
    }
    return "?";
}

namespace {

/// Peels vertices of degree <= r from the subgraph induced by `verts`;
/// returns the surviving core (empty iff the induced subgraph is r-degenerate).
std::vector<VertexId> peel_core(const Graph& g, const std::vector<VertexId>& verts, int r) {
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<int> deg(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); ++i)
        for (VertexId w : g.neighbors(verts[i]))
            if (local[w] >= 0) ++deg[i];

    std::vector<char> removed(verts.size(), 0);
    std::vector<int> queue;
    for (size_t i = 0; i < verts.size(); ++i)
        if (deg[i] <= r) {
            removed[i] = 1;
            queue.push_back(static_cast<int>(i));
        }
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (VertexId w : g.neighbors(verts[i])) {
            int j = local[w];
            if (j >= 0 && !removed[j] && --deg[j] <= r) {
                removed[j] = 1;
                queue.push_back(j);
            }
        }
    }

    std::vector<VertexId> core;
    for (size_t i = 0; i < verts.size(); ++i)
        if (!removed[i]) core.push_back(verts[i]);
    return core;
}

std::vector<VertexId> matched_vertices(const Graph& g, const std::vector<EdgeId>& members) {
    std::vector<VertexId> verts;
    verts.reserve(2 * members.size());
    for (EdgeId e : members) {
        verts.push_back(g.edges()[e].u);
        verts.push_back(g.edges()[e].v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

} // namespace

std::optional<EdgeId> matching_violation(const Graph& g, const EdgeSet& m, MatchingKind kind) {
    if (m.universe() != g.edge_count())
        throw EdgeNotInGraphError("edge set universe does not match the graph");
    const auto members = m.to_vector();

    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : members) {
        const auto [u, v] = g.edges()[e];
        if (used[u] || used[v]) return e;
        used[u] = used[v] = 1;
    }

    switch (kind.tag) {
        case MatchingKind::Tag::Plain: return std::nullopt;
        case MatchingKind::Tag::Induced:
            for (EdgeId e : members)
                if (m.intersects(g.distance_two_edges(e))) return e;
            return std::nullopt;
        case MatchingKind::Tag::Semistrong:
            for (EdgeId e : members) {
                const auto [u, v] = g.edges()[e];
                int du = 0, dv = 0;
                for (VertexId w : g.neighbors(u)) du += used[w];
                for (VertexId w : g.neighbors(v)) dv += used[w];
                if (du >= 2 && dv >= 2) return e;
            }
            return std::nullopt;
        case MatchingKind::Tag::Degenerate: {
            auto core = peel_core(g, matched_vertices(g, members), kind.r);
            if (core.empty()) return std::nullopt;
            std::vector<char> in_core(g.vertex_count(), 0);
            for (VertexId v : core) in_core[v] = 1;
            for (EdgeId e : members)
                if (in_core[g.edges()[e].u] && in_core[g.edges()[e].v]) return e;
            // Core consists of cross edges only; fall back to the first member.
            return members.empty() ? std::nullopt : std::optional<EdgeId>(members.front());
        }
    }
    return std::nullopt;
}

bool is_matching_of_kind(const Graph& g, const EdgeSet& m, MatchingKind kind) {
    return !matching_violation(g, m, kind).has_value();
}

namespace detail {

void ClassState::add(EdgeId e) {
    members_.push_back(e);
    members_mask_.insert(e);
    vmark_[g_->edges()[e].u] = 1;
    vmark_[g_->edges()[e].v] = 1;
}

void ClassState::remove(EdgeId e) {
    auto it = std::find(members_.begin(), members_.end(), e);
    if (it != members_.end()) {
        *it = members_.back();
        members_.pop_back();
    }
    members_mask_.erase(e);
    vmark_[g_->edges()[e].u] = 0;
    vmark_[g_->edges()[e].v] = 0;
}

bool ClassState::doomed_with(EdgeId f, VertexId add_u, VertexId add_v) const {
    const auto [x, y] = g_->edges()[f];
    auto in_set = [&](VertexId w) { return vmark_[w] || w == add_u || w == add_v; };
    int dx = 0;
    for (VertexId w : g_->neighbors(x))
        if (in_set(w) && ++dx >= 2) break;
    if (dx < 2) return false;
    int dy = 0;
    for (VertexId w : g_->neighbors(y))
        if (in_set(w) && ++dy >= 2) break;
    return dy >= 2;
}

bool ClassState::degenerate_ok_with(EdgeId e, int r) const {
    std::vector<VertexId> verts;
    verts.reserve(2 * members_.size() + 2);
    for (EdgeId f : members_) {
        verts.push_back(g_->edges()[f].u);
        verts.push_back(g_->edges()[f].v);
    }
    verts.push_back(g_->edges()[e].u);
    verts.push_back(g_->edges()[e].v);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return peel_core(*g_, verts, r).empty();
}

bool ClassState::extension_ok(EdgeId e, MatchingKind kind) const {
    const auto [u, v] = g_->edges()[e];
    if (vmark_[u] || vmark_[v]) return false;
    switch (kind.tag) {
        case MatchingKind::Tag::Plain: return true;
        case MatchingKind::Tag::Induced:
            return !members_mask_.intersects(g_->distance_two_edges(e));
        case MatchingKind::Tag::Semistrong: {
            if (doomed_with(e, u, v)) return false;
            // Only members meeting e at distance 2 gain induced degree.
            const EdgeSet& d2 = g_->distance_two_edges(e);
            for (EdgeId f : members_)
                if (d2.contains(f) && doomed_with(f, u, v)) return false;
            return true;
        }
        case MatchingKind::Tag::Degenerate: return degenerate_ok_with(e, kind.r);
    }
    return false;
}

} // namespace detail

namespace {

class MatchingSearch {
public:
    MatchingSearch(const Graph& g, MatchingKind kind, BudgetTracker& budget)
        : g_(g), kind_(kind), budget_(budget), state_(g), best_witness_(g.edge_count()) {
        order_.resize(g.edge_count());
        std::iota(order_.begin(), order_.end(), 0);
        // High degree-sum edges first; low-degree edges constrain less and
        // are explored last.
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            int da = g.degree(g.edges()[a].u) + g.degree(g.edges()[a].v);
            int db = g.degree(g.edges()[b].u) + g.degree(g.edges()[b].v);
            if (da != db) return da > db;
            return a < b;
        });
    }

    MatchingResult run() {
        dfs(0, 0);
        MatchingResult res;
        res.status = budget_.exhausted() ? MatchingResult::Status::BudgetExceeded
                                         : MatchingResult::Status::Optimal;
        res.size = best_;
        res.witness = best_witness_;
        res.nodes = budget_.nodes();
        return res;
    }

private:
    void dfs(size_t pos, int cur) {
        if (cur > best_) {
            best_ = cur;
            best_witness_ = state_.members_mask();
        }
        if (pos == order_.size() || budget_.exhausted()) return;
        if (cur + static_cast<int>(order_.size() - pos) <= best_) return;

        int eligible = 0;
        for (size_t i = pos; i < order_.size(); ++i) {
            const auto [u, v] = g_.edges()[order_[i]];
            eligible += !state_.vertex_used(u) && !state_.vertex_used(v);
        }
        if (cur + eligible <= best_) return;

        EdgeId e = order_[pos];
        if (state_.extension_ok(e, kind_)) {
            if (!budget_.tick()) return;
            state_.add(e);
            dfs(pos + 1, cur + 1);
            state_.remove(e);
        }
        dfs(pos + 1, cur);
    }

    const Graph& g_;
    MatchingKind kind_;
    BudgetTracker& budget_;
    detail::ClassState state_;
    std::vector<EdgeId> order_;
    int best_ = -1;
    EdgeSet best_witness_;
};

} // namespace

MatchingResult max_matching(const Graph& g, MatchingKind kind, const SearchBudget& budget) {
    BudgetTracker tracker(budget);
    return MatchingSearch(g, kind, tracker).run();
}

} // namespace ssg
