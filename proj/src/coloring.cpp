#include "ssg/coloring.hpp"

#include <algorithm>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

EdgeColoring::EdgeColoring(int edge_count, int palette) : palette_(palette), colors_(edge_count, 0) {
    if (edge_count < 0 || palette < 0) throw InvalidParametersError("negative coloring dimensions");
}

void EdgeColoring::assign(EdgeId e, int color) {
    if (e < 0 || e >= edge_count()) throw UnknownEdgeError("edge id out of range");
    if (color < 1 || color > palette_)
        throw InvalidParametersError("color " + std::to_string(color) + " outside palette [1.." +
                                     std::to_string(palette_) + "]");
    colors_[e] = color;
}

bool EdgeColoring::total() const {
    return std::find(colors_.begin(), colors_.end(), 0) == colors_.end();
}

int EdgeColoring::assigned_count() const {
    return static_cast<int>(colors_.size() - std::count(colors_.begin(), colors_.end(), 0));
}

int EdgeColoring::max_color_used() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

int EdgeColoring::distinct_colors_used() const {
    std::set<int> seen(colors_.begin(), colors_.end());
    seen.erase(0);
    return static_cast<int>(seen.size());
}

ColoringKind ColoringKind::relaxed(int s, int t) {
    if (s < 0 || t < 0) throw InvalidParametersError("relaxed coloring needs s, t >= 0");
    return {Tag::Relaxed, s, t, 0};
}

ColoringKind ColoringKind::degenerate_classes(int r) {
    if (r < 0) throw InvalidParametersError("degenerate classes need r >= 0");
    return {Tag::DegenerateClasses, 0, 0, r};
}

std::optional<MatchingKind> ColoringKind::class_kind() const {
    switch (tag) {
        case Tag::Proper: return MatchingKind::plain();
        case Tag::Strong: return MatchingKind::induced();
        case Tag::Semistrong: return MatchingKind::semistrong();
        case Tag::DegenerateClasses: return MatchingKind::degenerate(r);
        case Tag::Relaxed: return std::nullopt;
    }
    return std::nullopt;
}

std::string to_string(ColoringKind kind) {
    switch (kind.tag) {
        case ColoringKind::Tag::Proper: return "proper";
        case ColoringKind::Tag::Strong: return "strong";
        case ColoringKind::Tag::Semistrong: return "semistrong";
        case ColoringKind::Tag::Relaxed:
            return "relaxed:" + std::to_string(kind.s) + "," + std::to_string(kind.t);
        case ColoringKind::Tag::DegenerateClasses: return "degenerate:" + std::to_string(kind.r);
    }
    return "?";
}

namespace {

void require_total(const Graph& g, const EdgeColoring& c) {
    if (c.edge_count() != g.edge_count())
        throw InvalidParametersError("coloring size does not match the graph");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!c.assigned(e)) throw PartialColoringError("edge " + std::to_string(e) + " is uncolored");
}

std::optional<Violation> pair_violation(const Graph& g, const EdgeColoring& c, bool distance_two,
                                        const std::string& what) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeSet& around = distance_two ? g.two_edge_neighborhood(e) : g.edge_neighborhood(e);
        std::optional<EdgeId> hit;
        around.for_each([&](EdgeId f) {
            if (!hit && f != e && c.color(f) == c.color(e)) hit = f;
        });
        if (hit) return Violation{e, hit, c.color(e), what};
    }
    return std::nullopt;
}

std::optional<Violation> class_violation(const Graph& g, const EdgeColoring& c, MatchingKind kind) {
    std::optional<Violation> best;
    for (int color = 1; color <= std::max(c.palette(), c.max_color_used()); ++color) {
        EdgeSet cls(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (c.color(e) == color) cls.insert(e);
        if (cls.empty()) continue;
        if (auto bad = matching_violation(g, cls, kind)) {
            if (!best || *bad < best->edge)
                best = Violation{*bad, std::nullopt, color,
                                 "color class " + std::to_string(color) + " is not a " +
                                     to_string(kind) + " matching"};
        }
    }
    return best;
}

std::optional<Violation> relaxed_violation(const Graph& g, const EdgeColoring& c, int s, int t) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int adj = 0, far = 0;
        std::optional<EdgeId> last_adj, last_far;
        g.edge_neighborhood(e).for_each([&](EdgeId f) {
            if (c.color(f) == c.color(e)) {
                ++adj;
                last_adj = f;
            }
        });
        g.distance_two_edges(e).for_each([&](EdgeId f) {
            if (c.color(f) == c.color(e)) {
                ++far;
                last_far = f;
            }
        });
        if (adj > s)
            return Violation{e, last_adj, c.color(e),
                             std::to_string(adj) + " same-colored adjacent edges, limit " +
                                 std::to_string(s)};
        if (far > t)
            return Violation{e, last_far, c.color(e),
                             std::to_string(far) + " same-colored edges at distance 2, limit " +
                                 std::to_string(t)};
    }
    return std::nullopt;
}

} // namespace

VerifyResult verify(const Graph& g, const EdgeColoring& c, ColoringKind kind) {
    require_total(g, c);
    std::optional<Violation> bad;
    switch (kind.tag) {
        case ColoringKind::Tag::Proper:
            bad = pair_violation(g, c, false, "adjacent edges share a color");
            break;
        case ColoringKind::Tag::Strong:
            bad = pair_violation(g, c, true, "edges within distance 2 share a color");
            break;
        case ColoringKind::Tag::Semistrong:
            bad = class_violation(g, c, MatchingKind::semistrong());
            break;
        case ColoringKind::Tag::DegenerateClasses:
            bad = class_violation(g, c, MatchingKind::degenerate(kind.r));
            break;
        case ColoringKind::Tag::Relaxed:
            bad = relaxed_violation(g, c, kind.s, kind.t);
            break;
    }
    return VerifyResult{!bad.has_value(), bad};
}

int count_distance2_conflicts(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    int count = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        g.distance_two_edges(e).for_each([&](EdgeId f) {
            if (f > e && c.color(f) == c.color(e)) ++count;
        });
    return count;
}

std::set<int> colors_at_vertex(const Graph& g, const EdgeColoring& c, VertexId v) {
    std::set<int> out;
    for (EdgeId e : g.incident_edges(v))
        if (c.assigned(e)) out.insert(c.color(e));
    return out;
}

std::set<int> available_colors(const Graph& g, const EdgeColoring& c, EdgeId e, int k) {
    if (e < 0 || e >= g.edge_count()) throw UnknownEdgeError("edge id out of range");
    if (c.assigned(e)) throw AlreadyColoredError("edge " + std::to_string(e) + " is already colored");
    std::set<int> out;
    for (int color = 1; color <= k; ++color) out.insert(color);
    g.two_edge_neighborhood(e).for_each([&](EdgeId f) {
        if (c.assigned(f)) out.erase(c.color(f));
    });
    return out;
}

} // namespace ssg
