#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/types.hpp"
#include "causaldisc/walk.hpp"

namespace causaldisc {

enum class Criterion : std::uint8_t { d, sigma };

const char* criterion_name(Criterion c);

/// d-blocking of a single walk by conditioning set c.
bool walk_d_blocked(const Dmg& g, const Walk& w, const NodeSet& c);

/// sigma-blocking: a conditioned non-collider blocks only if it points on the
/// walk to a node outside its strongly connected component.
bool walk_sigma_blocked(const Dmg& g, const Walk& w, const NodeSet& c);

bool walk_blocked(const Dmg& g, const Walk& w, const NodeSet& c, Criterion crit);

/// True iff every path between a and b is blocked by c under crit. Implemented
/// as a reachability search over edge-traversal states, not path enumeration.
bool separated(const Dmg& g, const NodeSet& a, const NodeSet& b, const NodeSet& c, Criterion crit);

/// Pairwise independence model: triples (i, j, z) with z in V \ {i,j},
/// stored symmetrically in (i, j).
class IndependenceModel {
public:
    explicit IndependenceModel(int universe_size) : n_(universe_size), zsets_(pair_count(n_)) {}

    int universe_size() const { return n_; }
    void add(int i, int j, const NodeSet& z);
    bool separated(int i, int j, const NodeSet& z) const;
    std::size_t triple_count() const;

    /// Sorted triples (i, j, z-mask) with i < j.
    std::vector<std::tuple<int, int, std::uint64_t>> triples() const;
    /// Canonical byte encoding; equal models encode identically.
    std::vector<std::uint8_t> encode() const;

    friend bool operator==(const IndependenceModel& a, const IndependenceModel& b) {
        return a.n_ == b.n_ && a.zsets_ == b.zsets_;
    }

private:
    static std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
    std::size_t pair_index(int i, int j) const;
    int n_;
    std::vector<std::vector<std::uint64_t>> zsets_;  // sorted z-masks per pair
};

/// All pairwise separations of g under crit. Exponential in the universe; the
/// cap guards against accidental blow-ups (universe_too_large).
IndependenceModel independence_model(const Dmg& g, Criterion crit, int cap = 12);

/// Checks the defining clauses on an explicit walk: every collider an ancestor
/// of {i, j}, every interior non-collider pointing only inside its component.
bool is_inducing_path(const Dmg& g, const Walk& w, int i, int j);

/// Walk-state search for an inducing path between i and j. Equivalent to
/// "no z separates i from j"; the all-z sweep is the test oracle for this.
bool exists_inducing_path(const Dmg& g, int i, int j);

enum class EndConstraint : std::uint8_t { any, into, out_of };

/// Inducing-walk existence with end-mark constraints (e.g. into j).
bool exists_inducing_walk(const Dmg& g, int i, int j, EndConstraint at_i, EndConstraint at_j);

/// Equality of pairwise independence models over a shared universe.
bool markov_equivalent(const Dmg& g1, const Dmg& g2, Criterion crit, int cap = 12);

namespace detail {

/// Precomputed edge-traversal states of a graph, reused across many queries.
/// Self-contained; the graph is passed alongside at query time.
struct TraversalIndex {
    struct Traversal {
        int from, to;
        Mark at_from, at_to;
    };
    explicit TraversalIndex(const Dmg& g);
    std::vector<Traversal> traversals;
    std::vector<std::vector<int>> out_of;  // traversal ids leaving each node
};

bool pair_connected(const Dmg& g, const TraversalIndex& t, int a, int b, const NodeSet& c,
                    Criterion crit);

}  // namespace detail

}  // namespace causaldisc
