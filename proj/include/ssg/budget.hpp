#pragma once

#include <chrono>
#include <cstdint>

#include "ssg/errors.hpp"

namespace ssg {

/// Node and wall-clock limits for the exact searches. With `deterministic`
/// set, the wall clock is ignored and outcomes depend only on the node cap.
struct SearchBudget {
    uint64_t max_nodes = 10'000'000;
    double max_seconds = 60.0;
    bool deterministic = false;
};

class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& b)
        : max_nodes_(b.max_nodes), use_clock_(!b.deterministic) {
        if (b.max_nodes == 0 || b.max_seconds <= 0)
            throw InvalidParametersError("search budget limits must be positive");
        if (use_clock_)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(b.max_seconds));
    }

    /// Counts one search node; returns false once the budget is exhausted.
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > max_nodes_) {
            exhausted_ = true;
        } else if (use_clock_ && (nodes_ & 4095) == 0 &&
                   std::chrono::steady_clock::now() > deadline_) {
            exhausted_ = true;
        }
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    uint64_t nodes() const { return nodes_; }
    uint64_t remaining_nodes() const { return nodes_ >= max_nodes_ ? 0 : max_nodes_ - nodes_; }

private:
    uint64_t max_nodes_;
    uint64_t nodes_ = 0;
    bool use_clock_;
    std::chrono::steady_clock::time_point deadline_{};
    bool exhausted_ = false;
};

} // namespace ssg
