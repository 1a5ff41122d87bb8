#include "causaldisc/separation.hpp"

#include <algorithm>
#include <deque>

namespace causaldisc {

const char* criterion_name(Criterion c) { return c == Criterion::d ? "d" : "sigma"; }

namespace {

// Blocking state of a single interior walk node.
struct Interior {
    int node;
    int prev, next;
    Mark in;   // mark at node on the edge from prev
    Mark out;  // mark at node on the edge to next
    bool collider() const { return in == Mark::arrow && out == Mark::arrow; }
};

template <typename Fn>
void for_each_interior(const Walk& w, Fn&& fn) {
    for (int k = 1; k < w.length(); ++k) {
        Interior it;
        it.node = w.node(k);
        it.prev = w.node(k - 1);
        it.next = w.node(k + 1);
        it.in = w.mark_at_to(k);
        it.out = w.mark_at_from(k + 1);
        fn(it);
    }
}

bool walk_blocked_impl(const Dmg& g, const Walk& w, const NodeSet& c, Criterion crit) {
    w.validate(g);
    if (c.contains(w.first()) || c.contains(w.last())) return true;
    NodeSet anc_c = g.ancestors(c);
    bool blocked = false;
    for_each_interior(w, [&](const Interior& it) {
        if (blocked) return;
        if (it.collider()) {
            if (!anc_c.contains(it.node)) blocked = true;
            return;
        }
        if (!c.contains(it.node)) return;
        if (crit == Criterion::d) {
            blocked = true;
            return;
        }
        // sigma: blocks only when pointing on the walk out of its component
        NodeSet scc = g.scc(it.node);
        if (it.in == Mark::tail && !scc.contains(it.prev)) blocked = true;
        if (it.out == Mark::tail && !scc.contains(it.next)) blocked = true;
    });
    return blocked;
}

}  // namespace

bool Walk::is_path() const {
    NodeSet seen = NodeSet::single(start_);
    for (const auto& s : steps_) {
        if (seen.contains(s.to)) return false;
        seen.insert(s.to);
    }
    return true;
}

Mark Walk::mark_at_from(int k) const {
    switch (steps_.at(k - 1).use) {
        case EdgeUse::directed_to: return Mark::tail;
        case EdgeUse::directed_from: return Mark::arrow;
        case EdgeUse::bidirected: return Mark::arrow;
    }
    return Mark::tail;
}

Mark Walk::mark_at_to(int k) const {
    switch (steps_.at(k - 1).use) {
        case EdgeUse::directed_to: return Mark::arrow;
        case EdgeUse::directed_from: return Mark::tail;
        case EdgeUse::bidirected: return Mark::arrow;
    }
    return Mark::tail;
}

void Walk::validate(const Dmg& g) const {
    int u = start_;
    if (u < 0 || u >= g.node_count()) throw Error(ErrorCode::invalid_walk, "walk start out of range");
    for (const auto& s : steps_) {
        if (s.to < 0 || s.to >= g.node_count())
            throw Error(ErrorCode::invalid_walk, "walk node out of range");
        bool ok = false;
        switch (s.use) {
            case EdgeUse::directed_to: ok = g.has_directed(u, s.to); break;
            case EdgeUse::directed_from: ok = g.has_directed(s.to, u); break;
            case EdgeUse::bidirected: ok = g.has_bidirected(u, s.to); break;
        }
        if (!ok)
            throw Error(ErrorCode::invalid_walk,
                        "walk uses missing edge " + g.name(u) + " .. " + g.name(s.to));
        u = s.to;
    }
}

bool walk_d_blocked(const Dmg& g, const Walk& w, const NodeSet& c) {
    return walk_blocked_impl(g, w, c, Criterion::d);
}

bool walk_sigma_blocked(const Dmg& g, const Walk& w, const NodeSet& c) {
    return walk_blocked_impl(g, w, c, Criterion::sigma);
}

bool walk_blocked(const Dmg& g, const Walk& w, const NodeSet& c, Criterion crit) {
    return walk_blocked_impl(g, w, c, crit);
}

namespace detail {

TraversalIndex::TraversalIndex(const Dmg& g) {
    out_of.assign(g.node_count(), {});
    auto add = [&](int from, int to, Mark at_from, Mark at_to) {
        out_of[from].push_back(static_cast<int>(traversals.size()));
        traversals.push_back({from, to, at_from, at_to});
    };
    for (auto [i, j] : g.directed_edges()) {
        add(i, j, Mark::tail, Mark::arrow);
        add(j, i, Mark::arrow, Mark::tail);
    }
    for (auto [i, j] : g.bidirected_edges()) {
        add(i, j, Mark::arrow, Mark::arrow);
        add(j, i, Mark::arrow, Mark::arrow);
    }
}

namespace {

// Shared BFS over edge traversals. pass(v, in_mark, prev, out_mark, next)
// decides whether the walk may continue through v.
template <typename Pass, typename InitFilter, typename AcceptFilter>
bool traversal_reachable(const TraversalIndex& t, int a, int b, Pass&& pass, InitFilter&& init_ok,
                         AcceptFilter&& accept_ok) {
    std::vector<char> visited(t.traversals.size(), 0);
    std::deque<int> queue;
    for (int id : t.out_of[a]) {
        if (!init_ok(t.traversals[id])) continue;
        visited[id] = 1;
        queue.push_back(id);
    }
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        const auto& tr = t.traversals[id];
        if (tr.to == b && accept_ok(tr)) return true;
        for (int nid : t.out_of[tr.to]) {
            if (visited[nid]) continue;
            const auto& nx = t.traversals[nid];
            if (!pass(tr.to, tr.at_to, tr.from, nx.at_from, nx.to)) continue;
            visited[nid] = 1;
            queue.push_back(nid);
        }
    }
    return false;
}

}  // namespace

bool pair_connected(const Dmg& g, const TraversalIndex& t, int a, int b, const NodeSet& c,
                    Criterion crit) {
    if (a == b) return !c.contains(a);
    if (c.contains(a) || c.contains(b)) return false;
    NodeSet anc_c = g.ancestors(c);
    auto pass = [&](int v, Mark in, int prev, Mark out, int next) {
        if (in == Mark::arrow && out == Mark::arrow) return anc_c.contains(v);
        if (!c.contains(v)) return true;
        if (crit == Criterion::d) return false;
        NodeSet scc = g.scc(v);
        if (in == Mark::tail && !scc.contains(prev)) return false;
        if (out == Mark::tail && !scc.contains(next)) return false;
        return true;
    };
    auto any = [](const TraversalIndex::Traversal&) { return true; };
    return traversal_reachable(t, a, b, pass, any, any);
}

}  // namespace detail

bool separated(const Dmg& g, const NodeSet& a, const NodeSet& b, const NodeSet& c, Criterion crit) {
    NodeSet universe = NodeSet::all(g.node_count());
    if (!a.is_subset_of(universe) || !b.is_subset_of(universe) || !c.is_subset_of(universe))
        throw Error(ErrorCode::unknown_node, "separation query references unknown nodes");
    detail::TraversalIndex t(g);
    for (int x : a)
        for (int y : b)
            if (detail::pair_connected(g, t, x, y, c, crit)) return false;
    return true;
}

void IndependenceModel::add(int i, int j, const NodeSet& z) {
    auto& v = zsets_[pair_index(i, j)];
    auto it = std::lower_bound(v.begin(), v.end(), z.bits());
    if (it == v.end() || *it != z.bits()) v.insert(it, z.bits());
}

bool IndependenceModel::separated(int i, int j, const NodeSet& z) const {
    const auto& v = zsets_[pair_index(i, j)];
    return std::binary_search(v.begin(), v.end(), z.bits());
}

std::size_t IndependenceModel::pair_index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw Error(ErrorCode::unknown_node, "bad pair in independence model query");
    if (i > j) std::swap(i, j);
    // index of (i, j) with i < j in row-major upper triangle
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

std::size_t IndependenceModel::triple_count() const {
    std::size_t c = 0;
    for (const auto& v : zsets_) c += v.size();
    return c;
}

std::vector<std::tuple<int, int, std::uint64_t>> IndependenceModel::triples() const {
    std::vector<std::tuple<int, int, std::uint64_t>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (std::uint64_t z : zsets_[pair_index(i, j)]) out.emplace_back(i, j, z);
    return out;
}

std::vector<std::uint8_t> IndependenceModel::encode() const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n_));
    for (const auto& v : zsets_) {
        std::uint64_t count = v.size();
        for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>(count >> (8 * k)));
        for (std::uint64_t z : v)
            for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>(z >> (8 * k)));
    }
    return out;
}

IndependenceModel independence_model(const Dmg& g, Criterion crit, int cap) {
    const int n = g.node_count();
    if (n > cap)
        throw Error(ErrorCode::universe_too_large,
                    "universe of " + std::to_string(n) + " nodes exceeds cap " + std::to_string(cap));
    IndependenceModel im(n);
    detail::TraversalIndex t(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (std::uint64_t zb = 0; zb < limit; ++zb) {
                if ((zb >> i) & 1u) continue;
                if ((zb >> j) & 1u) continue;
                NodeSet z(zb);
                if (!detail::pair_connected(g, t, i, j, z, crit)) im.add(i, j, z);
            }
        }
    return im;
}

bool is_inducing_path(const Dmg& g, const Walk& w, int i, int j) {
    w.validate(g);
    if (!((w.first() == i && w.last() == j) || (w.first() == j && w.last() == i)))
        throw Error(ErrorCode::invalid_walk, "walk does not connect the queried nodes");
    NodeSet anc_ends = g.ancestors(NodeSet::of({i, j}));
    bool ok = true;
    for_each_interior(w, [&](const Interior& it) {
        if (!ok) return;
        if (it.collider()) {
            if (!anc_ends.contains(it.node)) ok = false;
            return;
        }
        NodeSet scc = g.scc(it.node);
        if (it.in == Mark::tail && !scc.contains(it.prev)) ok = false;
        if (it.out == Mark::tail && !scc.contains(it.next)) ok = false;
    });
    return ok;
}

bool exists_inducing_walk(const Dmg& g, int i, int j, EndConstraint at_i, EndConstraint at_j) {
    if (i < 0 || j < 0 || i >= g.node_count() || j >= g.node_count())
        throw Error(ErrorCode::unknown_node, "inducing-path query references unknown nodes");
    if (i == j) throw Error(ErrorCode::validation_error, "inducing-path query needs distinct nodes");
    detail::TraversalIndex t(g);
    NodeSet anc_ends = g.ancestors(NodeSet::of({i, j}));
    auto pass = [&](int v, Mark in, int prev, Mark out, int next) {
        if (in == Mark::arrow && out == Mark::arrow) return anc_ends.contains(v);
        NodeSet scc = g.scc(v);
        if (in == Mark::tail && !scc.contains(prev)) return false;
        if (out == Mark::tail && !scc.contains(next)) return false;
        return true;
    };
    auto end_ok = [](EndConstraint c, Mark m) {
        switch (c) {
            case EndConstraint::any: return true;
            case EndConstraint::into: return m == Mark::arrow;
            case EndConstraint::out_of: return m == Mark::tail;
        }
        return true;
    };
    auto init_ok = [&](const detail::TraversalIndex::Traversal& tr) { return end_ok(at_i, tr.at_from); };
    auto accept_ok = [&](const detail::TraversalIndex::Traversal& tr) { return end_ok(at_j, tr.at_to); };
    return detail::traversal_reachable(t, i, j, pass, init_ok, accept_ok);
}

bool exists_inducing_path(const Dmg& g, int i, int j) {
    return exists_inducing_walk(g, i, j, EndConstraint::any, EndConstraint::any);
}

bool markov_equivalent(const Dmg& g1, const Dmg& g2, Criterion crit, int cap) {
    if (!g1.same_universe(g2))
        throw Error(ErrorCode::universe_mismatch, "graphs have different node universes");
    return independence_model(g1, crit, cap) == independence_model(g2, crit, cap);
}

}  // namespace causaldisc
