#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "causaldisc/types.hpp"

namespace causaldisc {

class Dmg;

/// Edge end mark of a partial ancestral graph.
enum class Mark : std::uint8_t { tail = 1, arrow = 2, circle = 3 };

const char* mark_name(Mark m);

/// Square matrix of edge end marks. end(a, b) is the mark attached at b on
/// the edge between a and b; 0 encodes "no edge". Presence is symmetric.
/// This is the mutable working representation used by the discovery engine;
/// Dpag wraps a validated, immutable copy.
class MarkMatrix {
public:
    MarkMatrix() = default;
    explicit MarkMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}

    int node_count() const { return n_; }
    bool adjacent(int a, int b) const { return e_[idx(a, b)] != 0; }
    bool has_end(int a, int b, Mark m) const { return e_[idx(a, b)] == static_cast<std::uint8_t>(m); }
    Mark end(int a, int b) const { return static_cast<Mark>(e_[idx(a, b)]); }

    void set_edge(int a, int b, Mark at_a, Mark at_b) {
        e_[idx(b, a)] = static_cast<std::uint8_t>(at_a);
        e_[idx(a, b)] = static_cast<std::uint8_t>(at_b);
    }
    void set_end(int a, int b, Mark at_b) { e_[idx(a, b)] = static_cast<std::uint8_t>(at_b); }
    void remove_edge(int a, int b) {
        e_[idx(a, b)] = 0;
        e_[idx(b, a)] = 0;
    }

    // Convenience queries in PAG vocabulary.
    bool has_directed(int i, int j) const {  // i -> j
        return adjacent(i, j) && end(j, i) == Mark::tail && end(i, j) == Mark::arrow;
    }
    bool has_bidirected(int i, int j) const {
        return adjacent(i, j) && end(j, i) == Mark::arrow && end(i, j) == Mark::arrow;
    }
    bool has_circle_circle(int i, int j) const {
        return adjacent(i, j) && end(j, i) == Mark::circle && end(i, j) == Mark::circle;
    }
    bool has_circle_arrow(int i, int j) const {  // i o-> j
        return adjacent(i, j) && end(j, i) == Mark::circle && end(i, j) == Mark::arrow;
    }
    /// Edge between i and j is into j (arrowhead at j).
    bool edge_into(int i, int j) const { return adjacent(i, j) && end(i, j) == Mark::arrow; }
    /// Edge between i and j is out of i (tail at i).
    bool edge_out_of(int i, int j) const { return adjacent(i, j) && end(j, i) == Mark::tail; }

    NodeSet adjacency(int i) const {
        NodeSet s;
        for (int j = 0; j < n_; ++j)
            if (j != i && adjacent(i, j)) s.insert(j);
        return s;
    }

    const std::vector<std::uint8_t>& raw() const { return e_; }
    friend bool operator==(const MarkMatrix& a, const MarkMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
    int n_ = 0;
    std::vector<std::uint8_t> e_;
};

struct EdgeView {
    bool adjacent = false;
    Mark at_i = Mark::circle;
    Mark at_j = Mark::circle;
    bool into_j() const { return adjacent && at_j == Mark::arrow; }
    bool into_i() const { return adjacent && at_i == Mark::arrow; }
    bool out_of_i() const { return adjacent && at_i == Mark::tail; }
    bool out_of_j() const { return adjacent && at_j == Mark::tail; }
};

/// Directed partial ancestral graph: at most one edge per pair, marks in
/// {tail, arrow, circle}, edge types restricted to ->, <-, <->, o->, <-o, o-o.
class Dpag {
public:
    Dpag(std::vector<std::string> names, MarkMatrix marks);

    int node_count() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    int index_of(const std::string& name) const;

    bool adjacent(int i, int j) const { check_node(i); check_node(j); return m_.adjacent(i, j); }
    /// Mark attached at b on the edge between a and b. Edge must exist.
    Mark end(int a, int b) const;
    EdgeView edge(int i, int j) const;

    bool has_directed(int i, int j) const { check_node(i); check_node(j); return m_.has_directed(i, j); }
    bool has_bidirected(int i, int j) const { check_node(i); check_node(j); return m_.has_bidirected(i, j); }
    bool has_circle_circle(int i, int j) const { check_node(i); check_node(j); return m_.has_circle_circle(i, j); }
    bool has_circle_arrow(int i, int j) const { check_node(i); check_node(j); return m_.has_circle_arrow(i, j); }
    bool edge_into(int i, int j) const { check_node(i); check_node(j); return m_.edge_into(i, j); }
    bool edge_out_of(int i, int j) const { check_node(i); check_node(j); return m_.edge_out_of(i, j); }

    NodeSet adjacency(int i) const { check_node(i); return m_.adjacency(i); }
    int edge_count() const;
    /// Edges as (a, b, mark_at_a, mark_at_b) with a < b, sorted.
    std::vector<std::tuple<int, int, Mark, Mark>> edges() const;

    /// Copy with the edge between a and b replaced (or added) as given.
    Dpag with_edge(int a, int b, Mark at_a, Mark at_b) const;

    const MarkMatrix& marks() const { return m_; }
    /// Canonical byte encoding for equality buckets.
    std::vector<std::uint8_t> encode() const;

    friend bool operator==(const Dpag& a, const Dpag& b) { return a.names_ == b.names_ && a.m_ == b.m_; }

private:
    void check_node(int i) const {
        if (i < 0 || i >= n_)
            throw Error(ErrorCode::unknown_node, "node index " + std::to_string(i) + " out of range");
    }
    int n_ = 0;
    std::vector<std::string> names_;
    MarkMatrix m_;
};

/// A DMAG is a circle-free DPAG that is ancestral and maximal. The alias is
/// structural; validity is checked by is_dmag.
using Dmag = Dpag;

/// True iff p has no circle marks, no directed or almost directed cycles,
/// and no inducing path between non-adjacent nodes.
bool is_dmag(const Dpag& p);

/// View a circle-free DPAG as a DMG (directed plus bidirected edges).
Dmg mixed_graph_of(const Dpag& p);

/// View a DMG with at most one edge per pair as a mark matrix.
MarkMatrix marks_of_mixed_graph(const Dmg& g);

}  // namespace causaldisc
