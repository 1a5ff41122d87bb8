#include "causaldisc/acyclify.hpp"

#include <algorithm>

#include "causaldisc/random.hpp"
#include "causaldisc/separation.hpp"

namespace causaldisc {

namespace {

// Inter-component edges per the copying rule, closed under repetition:
// i -> j iff i points at some member of j's component, and i <-> j iff some
// bidirected edge joins the two components (a copy is again an edge into the
// other component, so bidirected copying saturates both sides).
bool components_bidirected(const Dmg& g, int i, int j) {
    for (int l : g.scc(i))
        if (g.bidirected_neighbors(l).intersects(g.scc(j))) return true;
    return false;
}

void add_inter_scc_edges(const Dmg& g, std::vector<std::pair<int, int>>& dir,
                         std::vector<std::pair<int, int>>& bidir) {
    const int n = g.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || g.same_scc(i, j)) continue;
            if (g.children(i).intersects(g.scc(j))) dir.emplace_back(i, j);
            if (i < j && components_bidirected(g, i, j)) bidir.emplace_back(i, j);
        }
}

std::vector<std::vector<int>> nontrivial_sccs(const Dmg& g) {
    std::vector<std::vector<int>> out;
    NodeSet seen;
    for (int i = 0; i < g.node_count(); ++i) {
        if (seen.contains(i)) continue;
        NodeSet scc = g.scc(i);
        seen |= scc;
        if (scc.size() > 1) out.push_back(scc.to_vector());
    }
    return out;
}

}  // namespace

Acyclification canonical_acyclification(const Dmg& g) {
    std::vector<std::pair<int, int>> dir, bidir;
    const int n = g.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.same_scc(i, j)) bidir.emplace_back(i, j);
    add_inter_scc_edges(g, dir, bidir);
    return {Dmg(g.names(), dir, bidir), Acyclification::Provenance::canonical, 0};
}

Dmg acyclification_from_orders(const Dmg& g, const std::vector<std::vector<int>>& scc_orders) {
    std::vector<std::pair<int, int>> dir, bidir;
    for (const auto& order : scc_orders) {
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = a + 1; b < order.size(); ++b) dir.emplace_back(order[a], order[b]);
    }
    add_inter_scc_edges(g, dir, bidir);
    return Dmg(g.names(), dir, bidir);
}

Acyclification sample_acyclification(const Dmg& g, std::uint64_t seed, double intra_bidirected_density) {
    if (intra_bidirected_density < 0.0 || intra_bidirected_density > 1.0)
        throw Error(ErrorCode::invalid_density, "intra-component bidirected density must be in [0,1]");
    std::vector<std::pair<int, int>> dir, bidir;
    for (const auto& scc : nontrivial_sccs(g)) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(scc.front())));
        std::vector<int> order = scc;
        rng.shuffle(order);
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = a + 1; b < order.size(); ++b) dir.emplace_back(order[a], order[b]);
        if (intra_bidirected_density > 0.0) {
            for (std::size_t a = 0; a < scc.size(); ++a)
                for (std::size_t b = a + 1; b < scc.size(); ++b)
                    if (rng.coin(intra_bidirected_density)) bidir.emplace_back(scc[a], scc[b]);
        }
    }
    add_inter_scc_edges(g, dir, bidir);
    return {Dmg(g.names(), dir, bidir), Acyclification::Provenance::sampled, seed};
}

Acyclification ancestor_witness_acyclification(const Dmg& g, int i, int j) {
    if (!g.ancestors(j).contains(i))
        throw Error(ErrorCode::validation_error,
                    "'" + g.name(i) + "' is not an ancestor of '" + g.name(j) + "'");
    // Directed witness path by BFS over children.
    std::vector<int> pred(g.node_count(), -1);
    std::vector<int> queue{i};
    NodeSet seen = NodeSet::single(i);
    for (std::size_t q = 0; q < queue.size() && !seen.contains(j); ++q) {
        for (int w : g.children(queue[q])) {
            if (seen.contains(w)) continue;
            seen.insert(w);
            pred[w] = queue[q];
            queue.push_back(w);
        }
    }
    std::vector<int> path;
    for (int v = j; v != -1; v = pred[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());

    // Each component is visited contiguously; start its order at the entry
    // node and put the exit node second so the shortcut edge exists.
    std::vector<std::vector<int>> orders;
    for (const auto& scc : nontrivial_sccs(g)) {
        NodeSet members;
        for (int v : scc) members.insert(v);
        int entry = -1, exit = -1;
        for (int v : path)
            if (members.contains(v)) {
                if (entry == -1) entry = v;
                exit = v;
            }
        std::vector<int> order;
        if (entry != -1) {
            order.push_back(entry);
            if (exit != entry) order.push_back(exit);
        }
        for (int v : scc)
            if (v != entry && v != exit) order.push_back(v);
        orders.push_back(std::move(order));
    }
    return {acyclification_from_orders(g, orders), Acyclification::Provenance::sampled, 0};
}

bool is_acyclification(const Dmg& g, const Dmg& h) {
    if (!g.same_universe(h)) return false;
    if (!h.is_acyclic()) return false;
    const int n = g.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (g.same_scc(i, j)) {
                if (i < j && !h.adjacent(i, j)) return false;
                continue;
            }
            bool want_dir = g.children(i).intersects(g.scc(j));
            if (h.has_directed(i, j) != want_dir) return false;
            if (i < j && h.has_bidirected(i, j) != components_bidirected(g, i, j)) return false;
        }
    return true;
}

Dmag dmag_of_admg(const Dmg& h) {
    if (!h.is_acyclic()) throw Error(ErrorCode::not_acyclic, "graph has a directed cycle");
    const int n = h.node_count();
    MarkMatrix m(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!exists_inducing_path(h, u, v)) continue;
            if (h.ancestors(v).contains(u))
                m.set_edge(u, v, Mark::tail, Mark::arrow);
            else if (h.ancestors(u).contains(v))
                m.set_edge(u, v, Mark::arrow, Mark::tail);
            else
                m.set_edge(u, v, Mark::arrow, Mark::arrow);
        }
    return Dpag(h.names(), std::move(m));
}

}  // namespace causaldisc
