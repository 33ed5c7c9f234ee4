#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/coloring.hpp"
#include "ssg/graph.hpp"

namespace testutil {

/// Seeded G(n, p); deterministic per seed.
ssg::Graph random_graph(int n, double p, uint64_t seed);

/// Seeded random graph with a degree cap: pairs visited in random order,
/// kept with probability p while both endpoints stay under the cap.
ssg::Graph random_graph_max_degree(int n, double p, int max_deg, uint64_t seed);

/// Random total coloring with colors 1..k.
ssg::EdgeColoring random_coloring(const ssg::Graph& g, int k, uint64_t seed);

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout only
};

/// Runs a shell command, capturing stdout.
CommandResult run_command(const std::string& command);

/// Path of the ssg CLI binary under test.
std::string cli_path();

} // namespace testutil
