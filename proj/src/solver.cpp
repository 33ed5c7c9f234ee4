#include "ssg/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

/// Kuhn's augmenting-path matching between items and color values.
class DistinctAssigner {
public:
    DistinctAssigner(const std::vector<std::vector<int>>& avail) : avail_(avail) {
        for (const auto& set : avail_)
            for (int c : set)
                if (!color_index_.count(c)) {
                    int id = static_cast<int>(color_index_.size());
                    color_index_[c] = id;
                }
        match_color_.assign(color_index_.size(), -1);
    }

    std::optional<std::vector<int>> run() {
        const int q = static_cast<int>(avail_.size());
        for (int i = 0; i < q; ++i) {
            visited_.assign(color_index_.size(), 0);
            if (!augment(i)) return std::nullopt;
        }
        std::vector<int> out(q, 0);
        for (const auto& [color, idx] : color_index_)
            if (match_color_[idx] >= 0) out[match_color_[idx]] = color;
        return out;
    }

private:
    bool augment(int item) {
        for (int c : avail_[item]) {
            int idx = color_index_.at(c);
            if (visited_[idx]) continue;
            visited_[idx] = 1;
            if (match_color_[idx] < 0 || augment(match_color_[idx])) {
                match_color_[idx] = item;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& avail_;
    std::map<int, int> color_index_;
    std::vector<int> match_color_;
    std::vector<char> visited_;
};

/// Backtracking search for one component at a fixed palette size.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, ColoringKind kind, const SolverOptions& opt,
                   BudgetTracker& budget)
        : g_(g), k_(k), kind_(kind), opt_(opt), budget_(budget), color_(g.edge_count(), 0) {
        for (int c = 0; c <= k; ++c) classes_.emplace_back(g);
        order_.resize(g.edge_count());
        std::iota(order_.begin(), order_.end(), 0);
        // Most constrained first: decreasing |N2(e)|, ties by edge id.
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            int na = g.two_edge_neighborhood(a).size();
            int nb = g.two_edge_neighborhood(b).size();
            if (na != nb) return na > nb;
            return a < b;
        });
    }

    FeasibleStatus run(EdgeColoring* out) {
        out_ = out;
        FeasibleStatus st = dfs(0, 0);
        if (budget_.exhausted()) return FeasibleStatus::BudgetExceeded;
        return st;
    }

private:
    FeasibleStatus dfs(size_t pos, int max_used) {
        if (pos == order_.size()) {
            capture();
            return FeasibleStatus::Found;
        }
        if (budget_.exhausted()) return FeasibleStatus::BudgetExceeded;

        if (opt_.sdr_completion && static_cast<int>(order_.size() - pos) <= opt_.sdr_threshold &&
            try_distinct_completion(pos))
            return FeasibleStatus::Found;

        EdgeId e = order_[pos];
        const int cap = opt_.symmetry_breaking ? std::min(k_, max_used + 1) : k_;
        for (int c = 1; c <= cap; ++c) {
            if (!admissible(e, c)) continue;
            if (!budget_.tick()) return FeasibleStatus::BudgetExceeded;
            color_[e] = c;
            classes_[c].add(e);
            FeasibleStatus st = dfs(pos + 1, std::max(max_used, c));
            classes_[c].remove(e);
            color_[e] = 0;
            if (st != FeasibleStatus::Infeasible) return st;
        }
        return FeasibleStatus::Infeasible;
    }

    bool admissible(EdgeId e, int c) const {
        if (kind_.tag == ColoringKind::Tag::Relaxed) return relaxed_admissible(e, c);
        const auto& cls = classes_[c];
        if (kind_.tag == ColoringKind::Tag::Semistrong &&
            cls.members_mask().intersects(g_.square_partners(e)))
            return false;
        return cls.extension_ok(e, *kind_.class_kind());
    }

    bool relaxed_admissible(EdgeId e, int c) const {
        int adj = 0;
        bool ok = true;
        g_.edge_neighborhood(e).for_each([&](EdgeId f) {
            if (color_[f] != c) return;
            ++adj;
            // The neighbor's own adjacent count grows by one as well.
            if (count_same(g_.edge_neighborhood(f), c) + 1 > kind_.s) ok = false;
        });
        if (!ok || adj > kind_.s) return false;
        int far = 0;
        g_.distance_two_edges(e).for_each([&](EdgeId f) {
            if (color_[f] != c) return;
            ++far;
            if (count_same(g_.distance_two_edges(f), c) + 1 > kind_.t) ok = false;
        });
        return ok && far <= kind_.t;
    }

    int count_same(const EdgeSet& set, int c) const {
        int n = 0;
        set.for_each([&](EdgeId f) { n += color_[f] == c; });
        return n;
    }

    /// Distinct fresh colors for the whole tail: sound for every kind, since
    /// each class gains at most one edge at distance >= 3 from it.
    bool try_distinct_completion(size_t pos) {
        std::vector<std::vector<int>> avail;
        avail.reserve(order_.size() - pos);
        for (size_t i = pos; i < order_.size(); ++i) {
            std::vector<int> colors;
            EdgeId e = order_[i];
            for (int c = 1; c <= k_; ++c)
                if (!count_same(g_.two_edge_neighborhood(e), c)) colors.push_back(c);
            if (colors.empty()) return false;
            avail.push_back(std::move(colors));
        }
        auto assignment = DistinctAssigner(avail).run();
        if (!assignment) return false;
        for (size_t i = pos; i < order_.size(); ++i) color_[order_[i]] = (*assignment)[i - pos];
        capture();
        for (size_t i = pos; i < order_.size(); ++i) color_[order_[i]] = 0;
        return true;
    }

    void capture() {
        *out_ = EdgeColoring(g_.edge_count(), k_);
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (color_[e]) out_->assign(e, color_[e]);
    }

    const Graph& g_;
    int k_;
    ColoringKind kind_;
    SolverOptions opt_;
    BudgetTracker& budget_;
    std::vector<int> color_;
    std::vector<detail::ClassState> classes_;
    std::vector<EdgeId> order_;
    EdgeColoring* out_ = nullptr;
};

/// True when e and f could share a color as a two-edge class.
bool pair_compatible(const Graph& g, ColoringKind kind, EdgeId e, EdgeId f) {
    switch (kind.tag) {
        case ColoringKind::Tag::Proper: return !g.edge_neighborhood(e).contains(f);
        case ColoringKind::Tag::Strong: return !g.two_edge_neighborhood(e).contains(f);
        case ColoringKind::Tag::Semistrong:
            return !g.edge_neighborhood(e).contains(f) && !g.square_partners(e).contains(f);
        case ColoringKind::Tag::DegenerateClasses: {
            if (g.edge_neighborhood(e).contains(f)) return false;
            EdgeSet pair(g.edge_count());
            pair.insert(e);
            pair.insert(f);
            return is_matching_of_kind(g, pair, MatchingKind::degenerate(kind.r));
        }
        case ColoringKind::Tag::Relaxed:
            if (kind.s == 0 && g.edge_neighborhood(e).contains(f)) return false;
            if (kind.t == 0 && g.distance_two_edges(e).contains(f)) return false;
            return true;
    }
    return true;
}

int greedy_conflict_clique(const Graph& g, ColoringKind kind) {
    const int m = g.edge_count();
    if (m == 0 || m > 2000) return std::min(m, 1);
    std::vector<EdgeSet> conflict(m, EdgeSet(m));
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f)
            if (!pair_compatible(g, kind, e, f)) {
                conflict[e].insert(f);
                conflict[f].insert(e);
            }
    int best = 1;
    for (EdgeId seed = 0; seed < m; ++seed) {
        int size = 1;
        EdgeSet candidates = conflict[seed];
        while (!candidates.empty()) {
            // Next member: the candidate with most conflicts inside the pool.
            EdgeId pick = -1;
            int pick_score = -1;
            candidates.for_each([&](EdgeId f) {
                int score = (conflict[f] & candidates).size();
                if (score > pick_score) {
                    pick_score = score;
                    pick = f;
                }
            });
            ++size;
            candidates &= conflict[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

struct ComponentResult {
    FeasibleStatus status;
    int value = -1;
    EdgeColoring witness;
    LowerBoundMethod method = LowerBoundMethod::TrivialBound;
    int exhausted_at = -1;
};

int component_lower_bound(const Graph& g, ColoringKind kind, BudgetTracker& global) {
    if (g.edge_count() == 0) return 0;
    int lb = 1;
    if (kind.tag == ColoringKind::Tag::Relaxed)
        lb = std::max(lb, (g.max_degree() + kind.s) / (kind.s + 1));
    else
        lb = std::max(lb, g.max_degree());

    lb = std::max(lb, greedy_conflict_clique(g, kind));

    if (auto class_kind = kind.class_kind()) {
        // Covering bound: every class is a kind-matching of size <= nu.
        uint64_t slice = std::min<uint64_t>(2'000'000, global.remaining_nodes() / 4 + 1);
        MatchingResult nu = max_matching(g, *class_kind, SearchBudget{slice, 3600.0, true});
        if (nu.status == MatchingResult::Status::Optimal && nu.size > 0)
            lb = std::max(lb, (g.edge_count() + nu.size - 1) / nu.size);
    }
    return lb;
}

ComponentResult solve_component(const Graph& g, ColoringKind kind, const SolverOptions& opt,
                                BudgetTracker& budget) {
    ComponentResult res;
    if (g.edge_count() == 0) {
        res.status = FeasibleStatus::Found;
        res.value = 0;
        res.witness = EdgeColoring(0, 0);
        return res;
    }
    const int lb = component_lower_bound(g, kind, budget);
    for (int k = std::max(lb, 1);; ++k) {
        EdgeColoring witness;
        ColoringSearch search(g, k, kind, opt, budget);
        FeasibleStatus st = search.run(&witness);
        if (st == FeasibleStatus::Found) {
            res.status = st;
            res.value = k;
            res.witness = std::move(witness);
            if (k == std::max(lb, 1)) {
                res.method = LowerBoundMethod::TrivialBound;
            } else {
                res.method = LowerBoundMethod::ExhaustedAt;
                res.exhausted_at = k - 1;
            }
            return res;
        }
        if (st == FeasibleStatus::BudgetExceeded) {
            res.status = st;
            return res;
        }
    }
}

} // namespace

FeasibleResult feasible(const Graph& g, int k, ColoringKind kind, const SearchBudget& budget,
                        const SolverOptions& options) {
    if (k < 1) throw InvalidParametersError("feasible needs k >= 1");
    BudgetTracker tracker(budget);
    FeasibleResult res;
    EdgeColoring out(g.edge_count(), k);

    for (const auto& comp : g.components()) {
        auto sub = induced_subgraph(g, comp);
        if (sub.graph.edge_count() == 0) continue;
        EdgeColoring witness;
        ColoringSearch search(sub.graph, k, kind, options, tracker);
        FeasibleStatus st = search.run(&witness);
        if (st != FeasibleStatus::Found) {
            res.status = st;
            res.nodes = tracker.nodes();
            return res;
        }
        for (EdgeId e = 0; e < sub.graph.edge_count(); ++e)
            out.assign(sub.edge_map[e], witness.color(e));
    }
    res.status = FeasibleStatus::Found;
    res.coloring = std::move(out);
    res.nodes = tracker.nodes();
    return res;
}

int chromatic_lower_bound(const Graph& g, ColoringKind kind, const SearchBudget& budget) {
    BudgetTracker tracker(budget);
    int lb = 0;
    for (const auto& comp : g.components()) {
        auto sub = induced_subgraph(g, comp);
        lb = std::max(lb, component_lower_bound(sub.graph, kind, tracker));
    }
    return lb;
}

SolveResult chromatic_index(const Graph& g, ColoringKind kind, const SearchBudget& budget,
                            const SolverOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    BudgetTracker tracker(budget);
    SolveResult res;
    res.value = 0;
    res.witness = EdgeColoring(g.edge_count(), 0);
    res.lower_bound_method = LowerBoundMethod::TrivialBound;

    std::vector<ComponentResult> parts;
    for (const auto& comp : g.components()) {
        auto sub = induced_subgraph(g, comp);
        ComponentResult part = solve_component(sub.graph, kind, options, tracker);
        if (part.status == FeasibleStatus::BudgetExceeded) {
            res.status = SolveStatus::BudgetExceeded;
            res.stats.nodes = tracker.nodes();
            res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return res;
        }
        if (part.value > res.value) {
            res.value = part.value;
            res.lower_bound_method = part.method;
            res.exhausted_at = part.exhausted_at;
        }
        parts.push_back(std::move(part));
    }

    EdgeColoring out(g.edge_count(), res.value);
    size_t idx = 0;
    for (const auto& comp : g.components()) {
        auto sub = induced_subgraph(g, comp);
        const ComponentResult& part = parts[idx++];
        for (EdgeId e = 0; e < sub.graph.edge_count(); ++e)
            out.assign(sub.edge_map[e], part.witness.color(e));
    }
    res.status = SolveStatus::Solved;
    res.witness = std::move(out);
    res.stats.nodes = tracker.nodes();
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::optional<EdgeColoring> complete_by_distinct_representatives(
    const Graph& g, const EdgeColoring& partial, const std::vector<EdgeId>& uncolored,
    const std::vector<std::vector<int>>& availability) {
    if (uncolored.size() != availability.size())
        throw InvalidParametersError("availability must align with the uncolored edges");
    for (EdgeId e : uncolored) {
        if (e < 0 || e >= g.edge_count()) throw UnknownEdgeError("uncolored edge id out of range");
        if (partial.assigned(e)) throw AlreadyColoredError("edge " + std::to_string(e) + " is colored");
    }
    auto assignment = DistinctAssigner(availability).run();
    if (!assignment) return std::nullopt;

    int max_color = partial.palette();
    for (int c : *assignment) max_color = std::max(max_color, c);
    EdgeColoring out(partial.edge_count(), max_color);
    for (EdgeId e = 0; e < partial.edge_count(); ++e)
        if (partial.assigned(e)) out.assign(e, partial.color(e));
    for (size_t i = 0; i < uncolored.size(); ++i) out.assign(uncolored[i], (*assignment)[i]);
    return out;
}

} // namespace ssg
