#pragma once

#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"
#include "causaldisc/types.hpp"

namespace causaldisc {

/// How a step traverses its edge, relative to walk direction (u to v).
enum class EdgeUse : std::uint8_t {
    directed_to,    // u -> v
    directed_from,  // u <- v
    bidirected,     // u <-> v
};

struct WalkStep {
    int to;
    EdgeUse use;
};

/// Alternating node/edge sequence in a DMG. A trivial walk is a single node.
/// Walks may repeat nodes; is_path() reports node-distinctness.
class Walk {
public:
    explicit Walk(int start) : start_(start) {}
    Walk(int start, std::vector<WalkStep> steps) : start_(start), steps_(std::move(steps)) {}

    static Walk trivial(int node) { return Walk(node); }

    Walk& step(int to, EdgeUse use) {
        steps_.push_back({to, use});
        return *this;
    }
    Walk& forward(int to) { return step(to, EdgeUse::directed_to); }
    Walk& backward(int to) { return step(to, EdgeUse::directed_from); }
    Walk& bidir(int to) { return step(to, EdgeUse::bidirected); }

    int length() const { return static_cast<int>(steps_.size()); }
    int node(int k) const { return k == 0 ? start_ : steps_[k - 1].to; }
    int first() const { return start_; }
    int last() const { return node(length()); }
    const std::vector<WalkStep>& steps() const { return steps_; }

    bool is_path() const;

    /// Mark at the near (from) end of edge k (1-based edge position).
    Mark mark_at_from(int k) const;
    /// Mark at the far (to) end of edge k.
    Mark mark_at_to(int k) const;

    /// Node position k (0 < k < length) has both incident edges pointing at it.
    bool is_collider_at(int k) const {
        return mark_at_to(k) == Mark::arrow && mark_at_from(k + 1) == Mark::arrow;
    }

    /// Every step's edge must exist in g; throws invalid_walk otherwise.
    void validate(const Dmg& g) const;

private:
    int start_;
    std::vector<WalkStep> steps_;
};

}  // namespace causaldisc
