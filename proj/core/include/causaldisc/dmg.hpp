#pragma once

#include <string>
#include <utility>
#include <vector>

#include "causaldisc/types.hpp"

namespace causaldisc {

/// Directed mixed graph: directed and bidirected edges, cycles allowed.
/// Immutable after construction; ancestor/descendant/SCC closures are
/// precomputed so all queries are O(1) mask operations.
///
/// A pair of distinct nodes may carry up to three edges simultaneously
/// (i->j, j->i, i<->j); self-loops and duplicate edges are rejected.
class Dmg {
public:
    Dmg(std::vector<std::string> names,
        const std::vector<std::pair<int, int>>& directed,
        const std::vector<std::pair<int, int>>& bidirected);

    int node_count() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    /// Index of a node name, or -1.
    int index_of(const std::string& name) const;

    bool has_directed(int i, int j) const { check_node(i); check_node(j); return children_[i].contains(j); }
    bool has_bidirected(int i, int j) const { check_node(i); check_node(j); return bidir_[i].contains(j); }
    bool adjacent(int i, int j) const {
        return has_directed(i, j) || has_directed(j, i) || has_bidirected(i, j);
    }

    NodeSet parents(int j) const { check_node(j); return parents_[j]; }
    NodeSet children(int i) const { check_node(i); return children_[i]; }
    NodeSet bidirected_neighbors(int i) const { check_node(i); return bidir_[i]; }
    NodeSet neighbors(int i) const { check_node(i); return parents_[i] | children_[i] | bidir_[i]; }

    /// Ancestors via directed paths; every node is its own ancestor.
    NodeSet ancestors(int i) const { check_node(i); return anc_[i]; }
    NodeSet ancestors(const NodeSet& s) const;
    NodeSet descendants(int i) const { check_node(i); return desc_[i]; }
    NodeSet descendants(const NodeSet& s) const;

    /// Strongly connected component of i: an(i) & de(i).
    NodeSet scc(int i) const { check_node(i); return scc_[i]; }
    int scc_index(int i) const { check_node(i); return scc_id_[i]; }
    bool same_scc(int i, int j) const { return scc_index(i) == scc_index(j); }
    int scc_count() const { return scc_total_; }

    bool is_acyclic() const { return acyclic_; }

    /// Directed edges as ordered pairs, sorted.
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }
    /// Bidirected edges as (lo, hi) pairs, sorted.
    const std::vector<std::pair<int, int>>& bidirected_edges() const { return bidirected_; }

    bool same_universe(const Dmg& other) const { return names_ == other.names_; }

    friend bool operator==(const Dmg& a, const Dmg& b) {
        return a.names_ == b.names_ && a.directed_ == b.directed_ && a.bidirected_ == b.bidirected_;
    }

private:
    void check_node(int i) const {
        if (i < 0 || i >= n_)
            throw Error(ErrorCode::unknown_node, "node index " + std::to_string(i) + " out of range");
    }

    int n_ = 0;
    bool acyclic_ = true;
    int scc_total_ = 0;
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> directed_;
    std::vector<std::pair<int, int>> bidirected_;
    std::vector<NodeSet> parents_, children_, bidir_;
    std::vector<NodeSet> anc_, desc_, scc_;
    std::vector<int> scc_id_;
};

/// Validated construction from index pairs. Directed pairs are (from, to).
Dmg build_dmg(std::vector<std::string> names,
              const std::vector<std::pair<int, int>>& directed,
              const std::vector<std::pair<int, int>>& bidirected);

/// Default node names X1..Xn.
std::vector<std::string> default_names(int n);

}  // namespace causaldisc
