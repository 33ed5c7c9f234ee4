#pragma once

#include <string>
#include <string_view>

#include "ssg/coloring.hpp"
#include "ssg/graph.hpp"

namespace ssg {

/// Plain edge-list document: {"n": int, "edges": [[u, v], ...]}.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Coloring document, colors aligned with the edges array:
/// {"format":"ss-coloring/1","n":int,"edges":[[u,v],...],"k":int,"colors":[int or null,...]}
struct ColoringDocument {
    Graph graph;
    EdgeColoring coloring;
};

std::string coloring_to_json(const Graph& g, const EdgeColoring& c);
ColoringDocument coloring_from_json(std::string_view text);

/// DOT export; when a coloring is given, edge labels carry the colors.
std::string graph_to_dot(const Graph& g, const EdgeColoring* coloring = nullptr);

} // namespace ssg
