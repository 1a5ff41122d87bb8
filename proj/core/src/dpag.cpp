#include "causaldisc/dpag.hpp"

#include <tuple>

#include "causaldisc/dmg.hpp"
#include "causaldisc/separation.hpp"

namespace causaldisc {

const char* mark_name(Mark m) {
    switch (m) {
        case Mark::tail: return "tail";
        case Mark::arrow: return "arrow";
        case Mark::circle: return "circle";
    }
    return "?";
}

namespace {

bool allowed_edge_type(Mark at_a, Mark at_b) {
    // tail-tail and tail-circle combinations are not DPAG edges
    if (at_a == Mark::tail && at_b != Mark::arrow) return false;
    if (at_b == Mark::tail && at_a != Mark::arrow) return false;
    return true;
}

}  // namespace

Dpag::Dpag(std::vector<std::string> names, MarkMatrix marks)
    : n_(static_cast<int>(names.size())), names_(std::move(names)), m_(std::move(marks)) {
    if (m_.node_count() != n_)
        throw Error(ErrorCode::validation_error, "mark matrix size does not match node list");
    if (n_ > NodeSet::max_nodes)
        throw Error(ErrorCode::validation_error, "graphs are limited to 64 nodes");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (names_[i] == names_[j])
                throw Error(ErrorCode::validation_error, "duplicate node name '" + names_[i] + "'");
    for (int i = 0; i < n_; ++i) {
        if (m_.adjacent(i, i))
            throw Error(ErrorCode::validation_error, "self-loop at node '" + names_[i] + "'");
        for (int j = i + 1; j < n_; ++j) {
            if (m_.adjacent(i, j) != m_.adjacent(j, i))
                throw Error(ErrorCode::validation_error, "asymmetric edge presence");
            if (m_.adjacent(i, j) && !allowed_edge_type(m_.end(j, i), m_.end(i, j)))
                throw Error(ErrorCode::validation_error,
                            "forbidden edge type between '" + names_[i] + "' and '" + names_[j] + "'");
        }
    }
}

int Dpag::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

Mark Dpag::end(int a, int b) const {
    check_node(a);
    check_node(b);
    if (!m_.adjacent(a, b))
        throw Error(ErrorCode::validation_error,
                    "no edge between '" + names_[a] + "' and '" + names_[b] + "'");
    return m_.end(a, b);
}

EdgeView Dpag::edge(int i, int j) const {
    check_node(i);
    check_node(j);
    if (i == j) throw Error(ErrorCode::validation_error, "edge query needs distinct nodes");
    EdgeView v;
    v.adjacent = m_.adjacent(i, j);
    if (v.adjacent) {
        v.at_i = m_.end(j, i);
        v.at_j = m_.end(i, j);
    }
    return v;
}

int Dpag::edge_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (m_.adjacent(i, j)) ++c;
    return c;
}

std::vector<std::tuple<int, int, Mark, Mark>> Dpag::edges() const {
    std::vector<std::tuple<int, int, Mark, Mark>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (m_.adjacent(i, j)) out.emplace_back(i, j, m_.end(j, i), m_.end(i, j));
    return out;
}

Dpag Dpag::with_edge(int a, int b, Mark at_a, Mark at_b) const {
    check_node(a);
    check_node(b);
    MarkMatrix m = m_;
    m.set_edge(a, b, at_a, at_b);
    return Dpag(names_, std::move(m));
}

std::vector<std::uint8_t> Dpag::encode() const {
    std::vector<std::uint8_t> out;
    out.reserve(m_.raw().size() + 1);
    out.push_back(static_cast<std::uint8_t>(n_));
    out.insert(out.end(), m_.raw().begin(), m_.raw().end());
    return out;
}

Dmg mixed_graph_of(const Dpag& p) {
    const int n = p.node_count();
    std::vector<std::pair<int, int>> dir, bidir;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!p.adjacent(i, j)) continue;
            Mark at_i = p.end(j, i), at_j = p.end(i, j);
            if (at_i == Mark::circle || at_j == Mark::circle)
                throw Error(ErrorCode::validation_error,
                            "graph still carries circle marks; not a mixed graph");
            if (at_i == Mark::tail)
                dir.emplace_back(i, j);
            else if (at_j == Mark::tail)
                dir.emplace_back(j, i);
            else
                bidir.emplace_back(i, j);
        }
    return Dmg(p.names(), dir, bidir);
}

MarkMatrix marks_of_mixed_graph(const Dmg& g) {
    const int n = g.node_count();
    MarkMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int kinds = (g.has_directed(i, j) ? 1 : 0) + (g.has_directed(j, i) ? 1 : 0) +
                        (g.has_bidirected(i, j) ? 1 : 0);
            if (kinds == 0) continue;
            if (kinds > 1)
                throw Error(ErrorCode::validation_error,
                            "multiple edges between '" + g.name(i) + "' and '" + g.name(j) + "'");
            if (g.has_directed(i, j))
                m.set_edge(i, j, Mark::tail, Mark::arrow);
            else if (g.has_directed(j, i))
                m.set_edge(i, j, Mark::arrow, Mark::tail);
            else
                m.set_edge(i, j, Mark::arrow, Mark::arrow);
        }
    return m;
}

bool is_dmag(const Dpag& p) {
    const int n = p.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.adjacent(i, j) &&
                (p.end(i, j) == Mark::circle || p.end(j, i) == Mark::circle))
                return false;
    Dmg g = mixed_graph_of(p);
    if (!g.is_acyclic()) return false;
    for (auto [i, j] : g.bidirected_edges())
        if (g.ancestors(j).contains(i) || g.ancestors(i).contains(j)) return false;  // almost directed cycle
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j) && exists_inducing_path(g, i, j)) return false;
    return true;
}

}  // namespace causaldisc
