#pragma once

#include <optional>
#include <set>
#include <string>

#include "ssg/graph.hpp"
#include "ssg/matching.hpp"

namespace ssg {

/// Total or partial assignment of colors 1..k to edges; 0 means unassigned.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int edge_count, int palette);

    int palette() const { return palette_; }
    int edge_count() const { return static_cast<int>(colors_.size()); }

    bool assigned(EdgeId e) const { return colors_[e] != 0; }
    int color(EdgeId e) const { return colors_[e]; }

    void assign(EdgeId e, int color);
    void unassign(EdgeId e) { colors_[e] = 0; }

    bool total() const;
    int assigned_count() const;
    int max_color_used() const;
    int distinct_colors_used() const;

    const std::vector<int>& raw() const { return colors_; }

private:
    int palette_ = 0;
    std::vector<int> colors_;
};

/// The coloring classes: every class a matching of the matching-hierarchy
/// kind, plus the per-edge (s,t)-relaxed variant.
struct ColoringKind {
    enum class Tag { Proper, Strong, Semistrong, Relaxed, DegenerateClasses };

    Tag tag = Tag::Proper;
    int s = 0;
    int t = 0;
    int r = 0;

    static ColoringKind proper() { return {Tag::Proper, 0, 0, 0}; }
    static ColoringKind strong() { return {Tag::Strong, 0, 0, 0}; }
    static ColoringKind semistrong() { return {Tag::Semistrong, 0, 0, 0}; }
    static ColoringKind relaxed(int s, int t);
    static ColoringKind degenerate_classes(int r);

    /// The per-class matching requirement; nullopt for Relaxed, which is a
    /// per-edge condition rather than a class condition.
    std::optional<MatchingKind> class_kind() const;

    bool operator==(const ColoringKind&) const = default;
};

std::string to_string(ColoringKind kind);

struct Violation {
    EdgeId edge = -1;
    std::optional<EdgeId> partner;
    int color = 0;
    std::string message;
};

struct VerifyResult {
    bool ok = false;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }
};

/// Checks a total coloring against the kind; on failure reports the
/// lexicographically first violation (smallest edge id, then partner).
VerifyResult verify(const Graph& g, const EdgeColoring& c, ColoringKind kind);

/// Number of unordered pairs of equal-colored edges at distance exactly 2.
int count_distance2_conflicts(const Graph& g, const EdgeColoring& c);

/// Set of colors on the assigned edges incident to v.
std::set<int> colors_at_vertex(const Graph& g, const EdgeColoring& c, VertexId v);

/// Colors of [1..k] not appearing on any assigned edge at distance <= 2
/// from e. The edge itself must be unassigned.
std::set<int> available_colors(const Graph& g, const EdgeColoring& c, EdgeId e, int k);

} // namespace ssg
