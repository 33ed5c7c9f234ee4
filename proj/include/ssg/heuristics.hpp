#pragma once

#include "ssg/coloring.hpp"
#include "ssg/graph.hpp"

namespace ssg {

struct DescentStep {
    EdgeId edge = -1;
    int old_color = 0;
    int new_color = 0;
    int conflicts_before = 0;
    int conflicts_after = 0;
};

struct DescentResult {
    EdgeColoring coloring;
    std::vector<DescentStep> trace;
};

/// Constructive semistrong coloring with at most max_degree^2 colors:
/// greedy initialization that keeps every {e} U L(e) rainbow, then potential
/// descent recoloring edges with two or more distance-2 conflicts until each
/// edge has at most one. The number of conflicts strictly decreases at every
/// step, so the descent terminates.
DescentResult semistrong_delta_squared(const Graph& g);

/// Semistrong coloring of a tree with at most max_degree + 1 colors, and
/// exactly max_degree colors when the diameter is at most 4.
EdgeColoring tree_semistrong(const Graph& t);

} // namespace ssg
