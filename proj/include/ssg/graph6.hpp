#pragma once

#include <string>
#include <string_view>

#include "ssg/graph.hpp"

namespace ssg {

/// Decodes one graph6 line. A leading ">>graph6<<" header is tolerated.
/// Throws MalformedGraph6Error on bad length, out-of-range bytes, or
/// nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes the graph for its given labeling; parse_graph6 inverts this.
std::string emit_graph6(const Graph& g);

} // namespace ssg
