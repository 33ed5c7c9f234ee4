#pragma once

#include <optional>

#include "ssg/budget.hpp"
#include "ssg/graph.hpp"

namespace ssg {

/// The matching hierarchy: plain matchings, induced (strong) matchings,
/// semistrong matchings, and r-degenerate matchings.
struct MatchingKind {
    enum class Tag { Plain, Induced, Semistrong, Degenerate };

    Tag tag = Tag::Plain;
    int r = 0;

    static MatchingKind plain() { return {Tag::Plain, 0}; }
    static MatchingKind induced() { return {Tag::Induced, 0}; }
    static MatchingKind semistrong() { return {Tag::Semistrong, 0}; }
    static MatchingKind degenerate(int r);

    bool operator==(const MatchingKind&) const = default;
};

std::string to_string(MatchingKind kind);

/// Classifies an edge set against the given matching kind.
bool is_matching_of_kind(const Graph& g, const EdgeSet& m, MatchingKind kind);

/// First violating edge (smallest id), or nullopt when the set qualifies.
/// For Semistrong the certificate is an edge both of whose endpoints have
/// degree >= 2 in the subgraph induced by the matched vertices.
std::optional<EdgeId> matching_violation(const Graph& g, const EdgeSet& m, MatchingKind kind);

struct MatchingResult {
    enum class Status { Optimal, BudgetExceeded };
    Status status = Status::Optimal;
    int size = 0;
    EdgeSet witness;
    uint64_t nodes = 0;
};

/// Exact maximum matching of the given kind by branch and bound.
MatchingResult max_matching(const Graph& g, MatchingKind kind, const SearchBudget& budget = {});

namespace detail {

/// Incrementally maintained edge class with the vertex marks needed for the
/// kind-specific extension tests. Invariant: the current members already
/// satisfy the kind, so extension_ok only inspects what a new edge can break.
class ClassState {
public:
    explicit ClassState(const Graph& g)
        : g_(&g), members_mask_(g.edge_count()), vmark_(g.vertex_count(), 0) {}

    void add(EdgeId e);
    void remove(EdgeId e);

    const std::vector<EdgeId>& members() const { return members_; }
    const EdgeSet& members_mask() const { return members_mask_; }
    bool empty() const { return members_.empty(); }
    bool vertex_used(VertexId v) const { return vmark_[v] != 0; }

    bool extension_ok(EdgeId e, MatchingKind kind) const;

private:
    bool doomed_with(EdgeId f, VertexId add_u, VertexId add_v) const;
    bool degenerate_ok_with(EdgeId e, int r) const;

    const Graph* g_;
    std::vector<EdgeId> members_;
    EdgeSet members_mask_;
    std::vector<char> vmark_;
};

} // namespace detail

} // namespace ssg
