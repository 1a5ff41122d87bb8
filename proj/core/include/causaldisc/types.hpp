#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace causaldisc {

enum class ErrorCode {
    self_loop,
    duplicate_edge,
    unknown_node,
    universe_mismatch,
    universe_too_large,
    invalid_walk,
    not_acyclic,
    edge_not_directed,
    pair_not_eligible,
    chordality_violation,
    oracle_inconsistent,
    cap_exceeded,
    invalid_density,
    invalid_jci_subset,
    parse_error,
    validation_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Set of node indices, backed by a 64-bit mask. Graphs are capped at 64 nodes.
class NodeSet {
public:
    static constexpr int max_nodes = 64;

    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr NodeSet all(int n) {
        return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static NodeSet of(std::initializer_list<int> items) {
        NodeSet s;
        for (int i : items) s.insert(i);
        return s;
    }
    static NodeSet single(int i) {
        NodeSet s;
        s.insert(i);
        return s;
    }

    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool is_subset_of(const NodeSet& other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(const NodeSet& other) const { return (bits_ & other.bits_) != 0; }

    friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
    friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
    friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
    NodeSet& operator|=(NodeSet b) { bits_ |= b.bits_; return *this; }
    NodeSet& operator&=(NodeSet b) { bits_ &= b.bits_; return *this; }
    NodeSet& operator-=(NodeSet b) { bits_ &= ~b.bits_; return *this; }
    friend constexpr bool operator==(NodeSet a, NodeSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(NodeSet a, NodeSet b) { return a.bits_ < b.bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size());
        for (std::uint64_t m = bits_; m != 0; m &= m - 1) v.push_back(std::countr_zero(m));
        return v;
    }

    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits_}; }
    iterator end() const { return {0}; }

private:
    std::uint64_t bits_ = 0;
};

/// Invokes fn for each size-k subset of items (items ascending), in
/// lexicographic order of the chosen index sequences. fn returns true to stop.
template <typename Fn>
bool for_each_combination(const std::vector<int>& items, int k, Fn&& fn) {
    const int m = static_cast<int>(items.size());
    if (k > m) return false;
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
        NodeSet z;
        for (int i = 0; i < k; ++i) z.insert(items[pos[i]]);
        if (fn(z)) return true;
        int i = k - 1;
        while (i >= 0 && pos[i] == m - k + i) --i;
        if (i < 0) return false;
        ++pos[i];
        for (int l = i + 1; l < k; ++l) pos[l] = pos[l - 1] + 1;
    }
}

/// All subsets of items by ascending size, lexicographic within each size.
template <typename Fn>
bool for_each_subset(const std::vector<int>& items, Fn&& fn) {
    for (int k = 0; k <= static_cast<int>(items.size()); ++k)
        if (for_each_combination(items, k, fn)) return true;
    return false;
}

}  // namespace causaldisc
