#pragma once

#include <optional>

#include "ssg/budget.hpp"
#include "ssg/coloring.hpp"
#include "ssg/graph.hpp"

namespace ssg {

struct SolverOptions {
    bool symmetry_breaking = true;
    bool sdr_completion = true;
    int sdr_threshold = 10;
};

enum class FeasibleStatus { Found, Infeasible, BudgetExceeded };

struct FeasibleResult {
    FeasibleStatus status = FeasibleStatus::Infeasible;
    std::optional<EdgeColoring> coloring;
    uint64_t nodes = 0;
};

/// Searches for a total coloring of the given kind with at most k colors.
/// Infeasible is reported only after exhaustive refutation; a blown budget
/// is a distinct outcome, never conflated with infeasibility.
FeasibleResult feasible(const Graph& g, int k, ColoringKind kind, const SearchBudget& budget = {},
                        const SolverOptions& options = {});

enum class LowerBoundMethod { TrivialBound, ExhaustedAt };

struct SolveStats {
    uint64_t nodes = 0;
    double seconds = 0.0;
};

enum class SolveStatus { Solved, BudgetExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::BudgetExceeded;
    int value = -1;
    EdgeColoring witness;
    LowerBoundMethod lower_bound_method = LowerBoundMethod::TrivialBound;
    int exhausted_at = -1; // refuted palette size when lower_bound_method == ExhaustedAt
    SolveStats stats;
};

/// Minimal k admitting a coloring of the given kind. Disconnected graphs are
/// solved per component; the value is the maximum and the witness the union.
SolveResult chromatic_index(const Graph& g, ColoringKind kind, const SearchBudget& budget = {},
                            const SolverOptions& options = {});

/// Sound lower bound used to seed the incremental search: the trivial
/// degree bound, a greedy clique of pairwise color-conflicting edges, and
/// the covering bound ceil(m / max kind-matching size).
int chromatic_lower_bound(const Graph& g, ColoringKind kind, const SearchBudget& budget = {});

/// Assigns pairwise-distinct colors to the uncolored edges, each from its
/// availability set, via maximum bipartite matching. Returns nullopt exactly
/// when no system of distinct representatives exists.
std::optional<EdgeColoring> complete_by_distinct_representatives(
    const Graph& g, const EdgeColoring& partial, const std::vector<EdgeId>& uncolored,
    const std::vector<std::vector<int>>& availability);

} // namespace ssg
