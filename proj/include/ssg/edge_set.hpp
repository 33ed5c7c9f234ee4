#pragma once

#include <cstdint>
#include <vector>

namespace ssg {

using VertexId = int;
using EdgeId = int;

/// Fixed-universe bitset over edge ids. Iteration order is ascending id.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return universe_; }

    bool contains(EdgeId e) const { return (words_[e >> 6] >> (e & 63)) & 1; }

    void insert(EdgeId e) {
        uint64_t bit = uint64_t{1} << (e & 63);
        uint64_t& w = words_[e >> 6];
        count_ += !(w & bit);
        w |= bit;
    }

    void erase(EdgeId e) {
        uint64_t bit = uint64_t{1} << (e & 63);
        uint64_t& w = words_[e >> 6];
        count_ -= !!(w & bit);
        w &= ~bit;
    }

    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    void clear() {
        for (auto& w : words_) w = 0;
        count_ = 0;
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        recount();
        return *this;
    }

    EdgeSet& operator&=(const EdgeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        recount();
        return *this;
    }

    /// Set difference.
    EdgeSet& operator-=(const EdgeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        recount();
        return *this;
    }

    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

    bool operator==(const EdgeSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    bool is_subset_of(const EdgeSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const EdgeSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<EdgeId> to_vector() const {
        std::vector<EdgeId> out;
        out.reserve(count_);
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<EdgeId>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(static_cast<EdgeId>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

private:
    void recount() {
        count_ = 0;
        for (auto w : words_) count_ += __builtin_popcountll(w);
    }

    int universe_ = 0;
    int count_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace ssg
