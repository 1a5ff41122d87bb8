#include "causaldisc/identify.hpp"

#include <algorithm>
#include <optional>

#include "causaldisc/separation.hpp"

namespace causaldisc::identify {

using engine::pd_reachable;
using engine::uncovered_pd_first_steps;

const char* claim_kind_name(ClaimKind k) {
    switch (k) {
        case ClaimKind::ancestor: return "ancestor";
        case ClaimKind::non_ancestor: return "non_ancestor";
        case ClaimKind::unconfounded: return "unconfounded";
        case ClaimKind::direct_cause: return "direct_cause";
        case ClaimKind::non_direct_cause: return "non_direct_cause";
        case ClaimKind::non_cycle: return "non_cycle";
        case ClaimKind::direct_target: return "direct_target";
        case ClaimKind::non_target: return "non_target";
    }
    return "?";
}

namespace {

void check_pair(const Dpag& p, int i, int j) {
    if (i < 0 || j < 0 || i >= p.node_count() || j >= p.node_count())
        throw Error(ErrorCode::unknown_node, "node index out of range");
    if (i == j) throw Error(ErrorCode::validation_error, "query needs two distinct nodes");
}

std::optional<std::vector<int>> directed_path(const MarkMatrix& m, int from, int to) {
    const int n = m.node_count();
    std::vector<int> pred(n, -1);
    NodeSet seen = NodeSet::single(from);
    std::vector<int> queue{from};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int u = queue[q];
        if (u == to) {
            std::vector<int> path;
            for (int v = to; v != -1; v = pred[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int w = 0; w < n; ++w) {
            if (seen.contains(w) || !m.has_directed(u, w)) continue;
            seen.insert(w);
            pred[w] = u;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

struct UncoveredPdPathFinder {
    const MarkMatrix& m;
    int target;
    std::vector<int> path;
    NodeSet visited;

    bool dfs() {
        int cur = path.back();
        if (cur == target) return true;
        int prev = path[path.size() - 2];
        const int n = m.node_count();
        for (int w = 0; w < n; ++w) {
            if (visited.contains(w) || !m.adjacent(cur, w)) continue;
            if (m.end(w, cur) == Mark::arrow) continue;
            if (m.adjacent(prev, w)) continue;
            path.push_back(w);
            visited.insert(w);
            if (dfs()) return true;
            visited.erase(w);
            path.pop_back();
        }
        return false;
    }
};

// Uncovered possibly directed path from `from` to `to` whose first step is
// `first`; returns the node sequence or nothing.
std::optional<std::vector<int>> find_uncovered_pd_path(const MarkMatrix& m, int from, int first,
                                                       int to) {
    if (!m.adjacent(from, first) || m.end(first, from) == Mark::arrow) return std::nullopt;
    UncoveredPdPathFinder finder{m, to, {from, first}, NodeSet::of({from, first})};
    if (finder.dfs()) return finder.path;
    return std::nullopt;
}

// Collider path from some node k not adjacent to j into i, every interior
// node a collider on the path and a parent of j. Single-edge case (an edge
// into i from a node non-adjacent to j) is covered by the first level.
struct VisibilityWitnessFinder {
    const MarkMatrix& m;
    int i, j;
    NodeSet visited;

    bool search() {
        visited = NodeSet::of({i, j});
        return dfs(i);
    }

    bool dfs(int f) {
        const int n = m.node_count();
        for (int u = 0; u < n; ++u) {
            if (visited.contains(u) || !m.adjacent(u, f)) continue;
            if (m.end(u, f) != Mark::arrow) continue;  // edge must be into f
            if (!m.adjacent(u, j)) return true;        // u qualifies as k
            if (!m.has_directed(u, j)) continue;       // interior nodes are parents of j
            if (m.end(f, u) != Mark::arrow) continue;  // and colliders on the path
            visited.insert(u);
            if (dfs(u)) return true;
            visited.erase(u);
        }
        return false;
    }
};

bool definitely_visible_marks(const MarkMatrix& m, int i, int j) {
    if (!m.has_directed(i, j))
        throw Error(ErrorCode::edge_not_directed, "visibility is defined for directed edges only");
    VisibilityWitnessFinder finder{m, i, j, {}};
    return finder.search();
}

bool cyclic_pattern_matches(const MarkMatrix& m, int i, int j) {
    if (!m.has_circle_circle(i, j)) return false;
    const int n = m.node_count();
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (m.has_directed(k, i) != m.has_directed(k, j)) return false;
        if (m.has_bidirected(k, i) != m.has_bidirected(k, j)) return false;
        if (m.has_circle_arrow(k, i) != m.has_circle_arrow(k, j)) return false;
    }
    return true;
}

}  // namespace

bool contains(const Dpag& p, const Dmg& g) {
    if (p.names() != g.names())
        throw Error(ErrorCode::universe_mismatch, "DPAG and graph have different universes");
    const int n = g.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool adj = p.adjacent(i, j);
            if (adj != exists_inducing_path(g, i, j)) return false;
            if (!adj) continue;
            // arrowhead at j claims j is no ancestor of i; tail claims ancestry
            if (p.end(i, j) == Mark::arrow && g.ancestors(i).contains(j)) return false;
            if (p.end(j, i) == Mark::arrow && g.ancestors(j).contains(i)) return false;
            if (p.has_directed(i, j) && !g.ancestors(j).contains(i)) return false;
            if (p.has_directed(j, i) && !g.ancestors(i).contains(j)) return false;
        }
    return true;
}

bool identified_ancestor(const Dpag& p, int i, int j, Attested) {
    check_pair(p, i, j);
    const MarkMatrix& m = p.marks();
    if (directed_path(m, i, j)) return true;
    NodeSet firsts = uncovered_pd_first_steps(m, i, j);
    for (int u : firsts)
        for (int v : firsts)
            if (u < v && !m.adjacent(u, v)) return true;
    return false;
}

bool identified_ancestor(const DiscoveryResult& r, int i, int j) {
    return identified_ancestor(r.dpag, i, j, Attested{});
}

bool identified_non_ancestor(const Dpag& p, int i, int j) {
    check_pair(p, i, j);
    return !pd_reachable(p.marks(), i, j);
}

bool definitely_visible(const Dpag& p, int i, int j) {
    check_pair(p, i, j);
    return definitely_visible_marks(p.marks(), i, j);
}

bool identified_unconfounded(const Dpag& p, int i, int j) {
    check_pair(p, i, j);
    if (!p.adjacent(i, j)) return true;
    if (p.has_directed(i, j)) return definitely_visible(p, i, j);
    if (p.has_directed(j, i)) return definitely_visible(p, j, i);
    return false;
}

bool identified_non_direct_cause(const Dpag& p, int i, int j) {
    check_pair(p, i, j);
    if (!p.adjacent(i, j)) return true;
    return p.end(j, i) == Mark::arrow;  // edge into i
}

bool identified_direct_cause(const Dpag& p, int i, int j) {
    check_pair(p, i, j);
    const MarkMatrix& m = p.marks();
    if (!m.has_directed(i, j))
        throw Error(ErrorCode::edge_not_directed, "direct-cause criterion needs an edge i -> j");
    if (!pd_reachable(m, i, j, /*avoid_direct_edge=*/true)) return true;
    if (!definitely_visible_marks(m, i, j)) return false;
    const int n = m.node_count();
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (!m.adjacent(i, k) || m.end(k, i) == Mark::arrow) continue;  // i *-* k not into i
        if (!m.adjacent(k, j) || m.end(j, k) == Mark::arrow) continue;  // k *-* j not into k
        Dpag p_star = p.with_edge(k, j, Mark::tail, Mark::arrow);
        if (!definitely_visible_marks(p_star.marks(), k, j)) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> possibly_cyclic_pairs(const Dpag& p, Attested) {
    std::vector<std::pair<int, int>> out;
    const int n = p.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cyclic_pattern_matches(p.marks(), i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> possibly_cyclic_pairs(const DiscoveryResult& r) {
    return possibly_cyclic_pairs(r.dpag, Attested{});
}

namespace {

// Maximum-cardinality-search orientation of one circle-component. Earlier
// nodes point at later ones; earlier neighborhoods must be cliques, which is
// exactly what rules out new unshielded colliders.
void orient_circle_component(MarkMatrix& m, const std::vector<int>& comp, int seed_first,
                             int seed_second) {
    const int size = static_cast<int>(comp.size());
    std::vector<int> order;
    std::vector<char> selected(m.node_count(), 0);
    std::vector<int> weight(m.node_count(), 0);
    auto is_circle_edge = [&](int a, int b) { return m.has_circle_circle(a, b); };
    for (int step = 0; step < size; ++step) {
        int pick = -1;
        if (step == 0 && seed_first >= 0)
            pick = seed_first;
        else if (step == 1 && seed_second >= 0)
            pick = seed_second;
        else {
            for (int v : comp) {
                if (selected[v]) continue;
                if (pick == -1 || weight[v] > weight[pick]) pick = v;
            }
        }
        selected[pick] = 1;
        order.push_back(pick);
        for (int v : comp)
            if (!selected[v] && is_circle_edge(pick, v)) ++weight[v];
    }
    std::vector<int> pos(m.node_count(), -1);
    for (int k = 0; k < size; ++k) pos[order[k]] = k;
    // earlier neighbors of each node must be mutually adjacent
    for (int v : comp) {
        std::vector<int> earlier;
        for (int u : comp)
            if (is_circle_edge(u, v) && pos[u] < pos[v]) earlier.push_back(u);
        for (std::size_t a = 0; a < earlier.size(); ++a)
            for (std::size_t b = a + 1; b < earlier.size(); ++b)
                if (!m.adjacent(earlier[a], earlier[b]))
                    throw Error(ErrorCode::chordality_violation,
                                "circle component is not chordal; the input is not a complete "
                                "discovery output");
    }
    for (int u : comp)
        for (int v : comp) {
            if (u >= v || !is_circle_edge(u, v)) continue;
            if (pos[u] < pos[v])
                m.set_edge(u, v, Mark::tail, Mark::arrow);
            else
                m.set_edge(u, v, Mark::arrow, Mark::tail);
        }
}

}  // namespace

CycleWitnesses cycle_witnesses(const Dpag& p, int i, int j, Attested) {
    check_pair(p, i, j);
    if (!cyclic_pattern_matches(p.marks(), i, j))
        throw Error(ErrorCode::pair_not_eligible,
                    "pair does not match the possibly-cyclic pattern");
    const int n = p.node_count();
    MarkMatrix m = p.marks();
    // arrowhead augmentation: o-> becomes ->
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && m.has_circle_arrow(a, b)) m.set_end(b, a, Mark::tail);
    // connected components of the circle-circle subgraph
    std::vector<char> done(n, 0);
    for (int s = 0; s < n; ++s) {
        if (done[s]) continue;
        std::vector<int> comp{s};
        done[s] = 1;
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (int w = 0; w < n; ++w)
                if (!done[w] && m.has_circle_circle(comp[q], w)) {
                    done[w] = 1;
                    comp.push_back(w);
                }
        if (comp.size() < 2) continue;
        bool has_pair = std::find(comp.begin(), comp.end(), i) != comp.end();
        orient_circle_component(m, comp, has_pair ? i : -1, has_pair ? j : -1);
    }
    Dmag h(p.names(), m);
    Dmg acyclic = mixed_graph_of(h);
    auto dir = acyclic.directed_edges();
    dir.emplace_back(j, i);
    Dmg cyclic(acyclic.names(), dir, acyclic.bidirected_edges());
    return {std::move(cyclic), std::move(acyclic)};
}

CycleWitnesses cycle_witnesses(const DiscoveryResult& r, int i, int j) {
    return cycle_witnesses(r.dpag, i, j, Attested{});
}

std::vector<FeatureClaim> jci_direct_targets(const Dpag& p, const NodeSet& context_nodes,
                                             const NodeSet& system_nodes, Attested) {
    std::vector<FeatureClaim> out;
    const MarkMatrix& m = p.marks();
    for (int i : context_nodes)
        for (int j : system_nodes) {
            if (!p.adjacent(i, j)) {
                out.push_back({ClaimKind::non_target, i, j, "non-adjacent", {}});
                continue;
            }
            if (!m.has_directed(i, j)) continue;
            bool all_visible = true;
            for (int k : system_nodes) {
                if (k == j || !m.has_directed(i, k)) continue;
                if (!(m.has_circle_circle(k, j) || m.has_circle_arrow(k, j) || m.has_directed(k, j)))
                    continue;
                Dpag p_star = p.with_edge(k, j, Mark::tail, Mark::arrow);
                if (!definitely_visible_marks(p_star.marks(), k, j)) {
                    all_visible = false;
                    break;
                }
            }
            if (all_visible)
                out.push_back({ClaimKind::direct_target, i, j, "visible-in-star-graphs", {}});
        }
    return out;
}

std::vector<FeatureClaim> jci_direct_targets(const DiscoveryResult& r, const NodeSet& context_nodes,
                                             const NodeSet& system_nodes) {
    return jci_direct_targets(r.dpag, context_nodes, system_nodes, Attested{});
}

std::vector<std::pair<int, int>> jci_possibly_cyclic_pairs(const Dpag& p, const NodeSet& context_nodes,
                                                           Attested) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : possibly_cyclic_pairs(p, Attested{}))
        if (!context_nodes.contains(i) && !context_nodes.contains(j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> jci_possibly_cyclic_pairs(const DiscoveryResult& r,
                                                           const NodeSet& context_nodes) {
    return jci_possibly_cyclic_pairs(r.dpag, context_nodes, Attested{});
}

std::vector<FeatureClaim> all_claims(const DiscoveryResult& r) {
    const Dpag& p = r.dpag;
    const MarkMatrix& m = p.marks();
    const int n = p.node_count();
    std::vector<FeatureClaim> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (auto path = directed_path(m, i, j); path && i != j) {
                out.push_back({ClaimKind::ancestor, i, j, "directed-path", {*path}});
            } else if (identified_ancestor(r, i, j)) {
                NodeSet firsts = uncovered_pd_first_steps(m, i, j);
                std::vector<std::vector<int>> witness;
                for (int u : firsts)
                    for (int v : firsts) {
                        if (u >= v || m.adjacent(u, v) || !witness.empty()) continue;
                        auto p1 = find_uncovered_pd_path(m, i, u, j);
                        auto p2 = find_uncovered_pd_path(m, i, v, j);
                        if (p1 && p2) {
                            witness.push_back(*p1);
                            witness.push_back(*p2);
                        }
                    }
                out.push_back({ClaimKind::ancestor, i, j, "twin-uncovered-paths", witness});
            }
            if (identified_non_ancestor(p, i, j))
                out.push_back({ClaimKind::non_ancestor, i, j, "no-possibly-directed-path", {}});
            if (identified_non_direct_cause(p, i, j))
                out.push_back({ClaimKind::non_direct_cause, i, j,
                               p.adjacent(i, j) ? "edge-into-source" : "non-adjacent", {}});
            if (m.has_directed(i, j) && identified_direct_cause(p, i, j))
                out.push_back({ClaimKind::direct_cause, i, j, "direct-cause-criterion", {}});
        }
    auto cyclic = possibly_cyclic_pairs(r);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (identified_unconfounded(p, i, j))
                out.push_back({ClaimKind::unconfounded, i, j,
                               p.adjacent(i, j) ? "visible-directed-edge" : "non-adjacent", {}});
            if (std::find(cyclic.begin(), cyclic.end(), std::make_pair(i, j)) == cyclic.end())
                out.push_back({ClaimKind::non_cycle, i, j, "pattern-mismatch", {}});
        }
    return out;
}

bool satisfies_arrowhead_shape(const Dpag& p) {
    const MarkMatrix& m = p.marks();
    const int n = p.node_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !m.adjacent(a, b) || m.end(a, b) != Mark::arrow) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || !m.adjacent(b, c)) continue;
                if (m.end(c, b) != Mark::circle) continue;  // b o-* c
                if (!m.adjacent(a, c) || m.end(a, c) != Mark::arrow) return false;
                if (m.has_directed(a, b) && m.has_bidirected(a, c)) return false;
            }
        }
    return true;
}

}  // namespace causaldisc::identify
