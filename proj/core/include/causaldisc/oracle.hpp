#pragma once

#include <functional>
#include <string>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/separation.hpp"

namespace causaldisc {

/// Conditional-independence oracle over a fixed, ordered node universe.
/// Implementations must be symmetric in (i, j) and deterministic.
class IndependenceOracle {
public:
    virtual ~IndependenceOracle() = default;
    virtual int universe_size() const = 0;
    virtual const std::vector<std::string>& universe_names() const = 0;
    virtual bool independent(int i, int j, const NodeSet& given) const = 0;
};

/// Oracle answering separation queries against a ground-truth graph.
class GraphOracle final : public IndependenceOracle {
public:
    GraphOracle(Dmg g, Criterion crit) : g_(std::move(g)), crit_(crit), index_(g_) {}

    int universe_size() const override { return g_.node_count(); }
    const std::vector<std::string>& universe_names() const override { return g_.names(); }
    bool independent(int i, int j, const NodeSet& given) const override {
        return !detail::pair_connected(g_, index_, i, j, given, crit_);
    }

    const Dmg& graph() const { return g_; }
    Criterion criterion() const { return crit_; }

private:
    Dmg g_;
    Criterion crit_;
    detail::TraversalIndex index_;
};

inline GraphOracle graph_oracle(const Dmg& g, Criterion crit) { return GraphOracle(g, crit); }

/// Oracle backed by an arbitrary predicate; mostly for tests and adapters.
class FunctionOracle final : public IndependenceOracle {
public:
    FunctionOracle(std::vector<std::string> names, std::function<bool(int, int, const NodeSet&)> fn)
        : names_(std::move(names)), fn_(std::move(fn)) {}

    int universe_size() const override { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& universe_names() const override { return names_; }
    bool independent(int i, int j, const NodeSet& given) const override { return fn_(i, j, given); }

private:
    std::vector<std::string> names_;
    std::function<bool(int, int, const NodeSet&)> fn_;
};

}  // namespace causaldisc
