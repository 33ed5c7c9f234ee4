#include "testutil.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace testutil {

ssg::Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) edges.emplace_back(u, v);
    return ssg::Graph(n, edges);
}

ssg::Graph random_graph_max_degree(int n, double p, int max_deg, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::vector<int> degree(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pairs) {
        if (degree[u] >= max_deg || degree[v] >= max_deg) continue;
        if (std::uniform_real_distribution<double>(0, 1)(rng) >= p) continue;
        ++degree[u];
        ++degree[v];
        edges.emplace_back(u, v);
    }
    return ssg::Graph(n, edges);
}

ssg::EdgeColoring random_coloring(const ssg::Graph& g, int k, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ssg::EdgeColoring c(g.edge_count(), k);
    for (ssg::EdgeId e = 0; e < g.edge_count(); ++e)
        c.assign(e, 1 + static_cast<int>(rng() % k));
    return c;
}

CommandResult run_command(const std::string& command) {
    CommandResult res;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        res.output.append(buffer.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string cli_path() {
#ifdef SSG_CLI_PATH
    return SSG_CLI_PATH;
#else
    throw std::runtime_error("SSG_CLI_PATH not defined");
#endif
}

} // namespace testutil
