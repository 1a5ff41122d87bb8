#include "causaldisc/discovery.hpp"

#include <algorithm>

namespace causaldisc {

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::bk: return "BK";
        case RuleId::r0: return "R0";
        case RuleId::r1: return "R1";
        case RuleId::r2a: return "R2a";
        case RuleId::r2b: return "R2b";
        case RuleId::r3: return "R3";
        case RuleId::r4a: return "R4a";
        case RuleId::r4b: return "R4b";
        case RuleId::r8a: return "R8a";
        case RuleId::r9: return "R9";
        case RuleId::r10: return "R10";
        case RuleId::m1: return "M1";
        case RuleId::m2: return "M2";
        case RuleId::m3: return "M3";
    }
    return "?";
}

void SepSets::set(int i, int j, const NodeSet& z) {
    if (i > j) std::swap(i, j);
    map_.insert_or_assign({i, j}, z);
}

std::optional<NodeSet> SepSets::find(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = map_.find({i, j});
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

BackgroundKnowledge BackgroundKnowledge::jci(unsigned subset, NodeSet context_nodes) {
    if (subset != 0u && subset != 1u && subset != 3u && subset != 7u)
        throw Error(ErrorCode::invalid_jci_subset,
                    "JCI assumption subset must be one of {}, {1}, {1,2}, {1,2,3}");
    BackgroundKnowledge bk(Kind::jci);
    bk.jci_subset_ = subset;
    bk.context_nodes_ = context_nodes;
    return bk;
}

bool BackgroundKnowledge::check(const Dmg& g) const {
    switch (kind_) {
        case Kind::none: return true;
        case Kind::acyclicity: return g.is_acyclic();
        case Kind::causal_sufficiency: return g.bidirected_edges().empty();
        case Kind::jci: return check_jci_assumptions(g, context_nodes_, jci_subset_);
    }
    return true;
}

bool check_jci_assumptions(const Dmg& g, NodeSet context_nodes, unsigned subset) {
    const int n = g.node_count();
    if (!context_nodes.is_subset_of(NodeSet::all(n)))
        throw Error(ErrorCode::unknown_node, "context nodes outside the graph");
    NodeSet systems = NodeSet::all(n) - context_nodes;
    if (subset & 1u) {  // exogeneity: no system -> context
        for (int k : context_nodes)
            if (g.parents(k).intersects(systems)) return false;
    }
    if (subset & 2u) {  // randomization: no context <-> system
        for (int k : context_nodes)
            if (g.bidirected_neighbors(k).intersects(systems)) return false;
    }
    if (subset & 4u) {  // genericity: context blocks purely bidirected
        for (int k : context_nodes)
            for (int k2 : context_nodes) {
                if (k == k2) continue;
                if (g.has_directed(k, k2)) return false;
                if (k < k2 && !g.has_bidirected(k, k2)) return false;
            }
    }
    return true;
}

namespace engine {

void Orienter::orient_end(int a, int b, Mark at_b, RuleId rule) {
    if (!m_.adjacent(a, b)) throw Error(ErrorCode::validation_error, "orienting a missing edge");
    Mark cur = m_.end(a, b);
    if (cur == at_b) return;
    if (cur != Mark::circle)
        throw Error(ErrorCode::oracle_inconsistent,
                    std::string("rule ") + rule_name(rule) +
                        " contradicts an earlier orientation; the input independence model "
                        "is not faithful to any graph");
    m_.set_end(a, b, at_b);
    trace_.push_back({rule, a, b, m_.end(b, a), m_.end(a, b)});
}

void Orienter::orient_edge(int a, int b, Mark at_a, Mark at_b, RuleId rule) {
    if (!m_.adjacent(a, b)) throw Error(ErrorCode::validation_error, "orienting a missing edge");
    Mark cur_a = m_.end(b, a), cur_b = m_.end(a, b);
    if (cur_a == at_a && cur_b == at_b) return;
    if ((cur_a != at_a && cur_a != Mark::circle) || (cur_b != at_b && cur_b != Mark::circle))
        throw Error(ErrorCode::oracle_inconsistent,
                    std::string("rule ") + rule_name(rule) +
                        " contradicts an earlier orientation; the input independence model "
                        "is not faithful to any graph");
    m_.set_edge(a, b, at_a, at_b);
    trace_.push_back({rule, a, b, at_a, at_b});
}

bool Orienter::apply_r0() {
    const int n = m_.node_count();
    bool changed = false;
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a) {
            if (a == c || !m_.adjacent(a, c)) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == c || !m_.adjacent(b, c) || m_.adjacent(a, b)) continue;
                auto sep = sepsets_->find(a, b);
                if (!sep || sep->contains(c)) continue;
                if (m_.end(a, c) != Mark::arrow) {
                    orient_end(a, c, Mark::arrow, RuleId::r0);
                    changed = true;
                }
                if (m_.end(b, c) != Mark::arrow) {
                    orient_end(b, c, Mark::arrow, RuleId::r0);
                    changed = true;
                }
            }
        }
    return changed;
}

bool Orienter::apply_r0_cpdag() {
    const int n = m_.node_count();
    bool changed = false;
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a) {
            if (a == c || !m_.adjacent(a, c)) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == c || !m_.adjacent(b, c) || m_.adjacent(a, b)) continue;
                auto sep = sepsets_->find(a, b);
                if (!sep || sep->contains(c)) continue;
                if (!m_.has_directed(a, c)) {
                    orient_edge(a, c, Mark::tail, Mark::arrow, RuleId::r0);
                    changed = true;
                }
                if (!m_.has_directed(b, c)) {
                    orient_edge(b, c, Mark::tail, Mark::arrow, RuleId::r0);
                    changed = true;
                }
            }
        }
    return changed;
}

bool Orienter::apply_r1() {
    const int n = m_.node_count();
    bool changed = false;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            if (b == c || !m_.adjacent(b, c) || m_.end(c, b) != Mark::circle) continue;
            for (int a = 0; a < n; ++a) {
                if (a == b || a == c) continue;
                if (!m_.adjacent(a, b) || m_.end(a, b) != Mark::arrow) continue;
                if (m_.adjacent(a, c)) continue;
                orient_edge(b, c, Mark::tail, Mark::arrow, RuleId::r1);
                changed = true;
                break;
            }
        }
    return changed;
}

bool Orienter::apply_r2a() {
    const int n = m_.node_count();
    bool changed = false;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c || !m_.adjacent(a, c) || m_.end(a, c) != Mark::circle) continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || b == c) continue;
                if (m_.has_directed(a, b) && m_.adjacent(b, c) && m_.end(b, c) == Mark::arrow) {
                    orient_end(a, c, Mark::arrow, RuleId::r2a);
                    changed = true;
                    break;
                }
            }
        }
    return changed;
}

bool Orienter::apply_r2b() {
    const int n = m_.node_count();
    bool changed = false;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c || !m_.adjacent(a, c) || m_.end(a, c) != Mark::circle) continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || b == c) continue;
                if (m_.adjacent(a, b) && m_.end(a, b) == Mark::arrow && m_.has_directed(b, c)) {
                    orient_end(a, c, Mark::arrow, RuleId::r2b);
                    changed = true;
                    break;
                }
            }
        }
    return changed;
}

bool Orienter::apply_r3() {
    const int n = m_.node_count();
    bool changed = false;
    for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
            if (b == d || !m_.adjacent(d, b) || m_.end(d, b) != Mark::circle) continue;
            bool done = false;
            for (int a = 0; a < n && !done; ++a) {
                if (a == b || a == d) continue;
                if (!m_.adjacent(a, b) || m_.end(a, b) != Mark::arrow) continue;
                if (!m_.adjacent(a, d) || m_.end(a, d) != Mark::circle) continue;
                for (int c = 0; c < n && !done; ++c) {
                    if (c == a || c == b || c == d) continue;
                    if (!m_.adjacent(c, b) || m_.end(c, b) != Mark::arrow) continue;
                    if (!m_.adjacent(c, d) || m_.end(c, d) != Mark::circle) continue;
                    if (m_.adjacent(a, c)) continue;
                    orient_end(d, b, Mark::arrow, RuleId::r3);
                    changed = true;
                    done = true;
                }
            }
        }
    return changed;
}

// Depth-first search for a discriminating path <x, m1..mn, k, j>: interior
// nodes are colliders on the path and parents of j; x is not adjacent to j.
// Returns the path [x, m1..mn, k] or empty.
namespace {
struct DiscPathFinder {
    const MarkMatrix& m;
    int k, j;
    std::vector<int> path;  // built back to front: [k, mn, ..., m1]
    NodeSet visited;

    std::vector<int> search() {
        path = {k};
        visited = NodeSet::of({k, j});
        std::vector<int> found;
        dfs(found);
        return found;
    }

    void dfs(std::vector<int>& found) {
        if (!found.empty()) return;
        const int f = path.back();
        const int n = m.node_count();
        for (int u = 0; u < n && found.empty(); ++u) {
            if (visited.contains(u) || !m.adjacent(u, f)) continue;
            if (f == k) {
                // first interior node: edge (u, k) must be into u
                if (m.end(f, u) != Mark::arrow) continue;
                if (!m.adjacent(u, j)) continue;  // too short to discriminate
                if (!m.has_directed(u, j)) continue;
                path.push_back(u);
                visited.insert(u);
                dfs(found);
                visited.erase(u);
                path.pop_back();
                continue;
            }
            // edge (u, f) must be into f
            if (m.end(u, f) != Mark::arrow) continue;
            if (!m.adjacent(u, j)) {
                // u plays the role of x
                found.assign(path.rbegin(), path.rend());
                found.insert(found.begin(), u);
                return;
            }
            if (!m.has_directed(u, j)) continue;
            if (m.end(f, u) != Mark::arrow) continue;  // collider half toward k
            path.push_back(u);
            visited.insert(u);
            dfs(found);
            visited.erase(u);
            path.pop_back();
        }
    }
};
}  // namespace

bool Orienter::r4_for_pair(int k, int j) {
    DiscPathFinder finder{m_, k, j, {}, {}};
    std::vector<int> path = finder.search();  // [x, m1..mn, k]
    if (path.empty()) return false;
    const int x = path.front();
    const int mn = path[path.size() - 2];
    auto sep = sepsets_->find(x, j);
    if (!sep) return false;
    if (sep->contains(k)) {
        orient_edge(k, j, Mark::tail, Mark::arrow, RuleId::r4a);
    } else {
        orient_end(mn, k, Mark::arrow, RuleId::r4b);
        orient_edge(k, j, Mark::arrow, Mark::arrow, RuleId::r4b);
    }
    return true;
}

bool Orienter::apply_r4() {
    const int n = m_.node_count();
    bool changed = false;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (k == j || !m_.adjacent(k, j) || m_.end(j, k) != Mark::circle) continue;
            if (r4_for_pair(k, j)) changed = true;
        }
    return changed;
}

bool Orienter::apply_r8a() {
    const int n = m_.node_count();
    bool changed = false;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (k == i || !m_.has_circle_arrow(k, i)) continue;
            for (int mid = 0; mid < n; ++mid) {
                if (mid == k || mid == i) continue;
                if (m_.has_directed(k, mid) && m_.has_directed(mid, i)) {
                    orient_end(i, k, Mark::tail, RuleId::r8a);
                    changed = true;
                    break;
                }
            }
        }
    return changed;
}

bool Orienter::apply_r9() {
    const int n = m_.node_count();
    bool changed = false;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (k == i || !m_.has_circle_arrow(k, i)) continue;
            NodeSet firsts = uncovered_pd_first_steps(m_, k, i);
            for (int m1 : firsts) {
                if (m1 == i || m_.adjacent(m1, i)) continue;
                orient_end(i, k, Mark::tail, RuleId::r9);
                changed = true;
                break;
            }
        }
    return changed;
}

bool Orienter::apply_r10() {
    const int n = m_.node_count();
    bool changed = false;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (k == i || !m_.has_circle_arrow(k, i)) continue;
            std::vector<int> into_i;
            for (int u = 0; u < n; ++u)
                if (u != k && u != i && m_.has_directed(u, i)) into_i.push_back(u);
            bool oriented = false;
            for (std::size_t s = 0; s < into_i.size() && !oriented; ++s)
                for (std::size_t t = 0; t < into_i.size() && !oriented; ++t) {
                    if (s == t) continue;
                    NodeSet f1 = uncovered_pd_first_steps(m_, k, into_i[s]);
                    if (f1.empty()) continue;
                    NodeSet f2 = uncovered_pd_first_steps(m_, k, into_i[t]);
                    for (int m1 : f1) {
                        for (int m2 : f2) {
                            if (m1 == m2 || m_.adjacent(m1, m2)) continue;
                            orient_end(i, k, Mark::tail, RuleId::r10);
                            oriented = true;
                            changed = true;
                            break;
                        }
                        if (oriented) break;
                    }
                }
        }
    return changed;
}

void Orienter::run_arrowhead_stage() {
    bool changed = true;
    while (changed) {
        changed = false;
        if (apply_r1()) changed = true;
        if (apply_r2a()) changed = true;
        if (apply_r2b()) changed = true;
        if (apply_r3()) changed = true;
        if (apply_r4()) changed = true;
    }
}

void Orienter::run_tail_stage() {
    while (apply_r9()) {
    }
    bool changed = true;
    while (changed) {
        changed = false;
        if (apply_r8a()) changed = true;
        if (apply_r10()) changed = true;
    }
}

bool Orienter::any_rule_fires() {
    Orienter probe(m_, sepsets_);
    return probe.apply_r1() || probe.apply_r2a() || probe.apply_r2b() || probe.apply_r3() ||
           probe.apply_r4() || probe.apply_r8a() || probe.apply_r9() || probe.apply_r10();
}

bool Orienter::apply_meek1() {
    const int n = m_.node_count();
    bool changed = false;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            if (b == c || !m_.has_circle_circle(b, c)) continue;
            for (int a = 0; a < n; ++a) {
                if (a == b || a == c || !m_.has_directed(a, b) || m_.adjacent(a, c)) continue;
                orient_edge(b, c, Mark::tail, Mark::arrow, RuleId::m1);
                changed = true;
                break;
            }
        }
    return changed;
}

bool Orienter::apply_meek2() {
    const int n = m_.node_count();
    bool changed = false;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c || !m_.has_circle_circle(a, c)) continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || b == c) continue;
                if (m_.has_directed(a, b) && m_.has_directed(b, c)) {
                    orient_edge(a, c, Mark::tail, Mark::arrow, RuleId::m2);
                    changed = true;
                    break;
                }
            }
        }
    return changed;
}

bool Orienter::apply_meek3() {
    const int n = m_.node_count();
    bool changed = false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !m_.has_circle_circle(a, b)) continue;
            bool done = false;
            for (int c = 0; c < n && !done; ++c) {
                if (c == a || c == b || !m_.has_directed(c, b) || !m_.has_circle_circle(a, c))
                    continue;
                for (int d = c + 1; d < n && !done; ++d) {
                    if (d == a || d == b || !m_.has_directed(d, b) || !m_.has_circle_circle(a, d))
                        continue;
                    if (m_.adjacent(c, d)) continue;
                    orient_edge(a, b, Mark::tail, Mark::arrow, RuleId::m3);
                    changed = true;
                    done = true;
                }
            }
        }
    return changed;
}

void Orienter::run_meek() {
    bool changed = true;
    while (changed) {
        changed = false;
        if (apply_meek1()) changed = true;
        if (apply_meek2()) changed = true;
        if (apply_meek3()) changed = true;
    }
}

bool pd_reachable(const MarkMatrix& m, int from, int to, bool avoid_direct_edge) {
    if (from == to) return true;
    const int n = m.node_count();
    NodeSet visited = NodeSet::single(from);
    std::vector<int> queue{from};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int u = queue[q];
        for (int w = 0; w < n; ++w) {
            if (visited.contains(w) || !m.adjacent(u, w)) continue;
            if (m.end(w, u) == Mark::arrow) continue;  // edge into u: not possibly directed
            if (avoid_direct_edge && u == from && w == to) continue;
            if (w == to) return true;
            visited.insert(w);
            queue.push_back(w);
        }
    }
    return false;
}

namespace {
struct UncoveredPdSearch {
    const MarkMatrix& m;
    int target;

    bool dfs(int prev, int cur, NodeSet& visited) {
        if (cur == target) return true;
        const int n = m.node_count();
        for (int w = 0; w < n; ++w) {
            if (visited.contains(w) || !m.adjacent(cur, w)) continue;
            if (m.end(w, cur) == Mark::arrow) continue;  // must not be into cur
            if (m.adjacent(prev, w)) continue;           // triple must be unshielded
            visited.insert(w);
            if (dfs(cur, w, visited)) {
                visited.erase(w);
                return true;
            }
            visited.erase(w);
        }
        return false;
    }
};
}  // namespace

NodeSet uncovered_pd_first_steps(const MarkMatrix& m, int from, int to) {
    NodeSet out;
    const int n = m.node_count();
    if (from == to) return out;
    UncoveredPdSearch search{m, to};
    for (int s = 0; s < n; ++s) {
        if (s == from || !m.adjacent(from, s)) continue;
        if (m.end(s, from) == Mark::arrow) continue;
        NodeSet visited = NodeSet::of({from, s});
        if (search.dfs(from, s, visited)) out.insert(s);
    }
    return out;
}

NodeSet possible_d_sep(const MarkMatrix& m, int i) {
    const int n = m.node_count();
    std::vector<char> visited(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> queue;
    NodeSet out;
    for (int u = 0; u < n; ++u) {
        if (u == i || !m.adjacent(i, u)) continue;
        visited[static_cast<std::size_t>(i) * n + u] = 1;
        queue.emplace_back(i, u);
        out.insert(u);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [p, c] = queue[q];
        for (int w = 0; w < n; ++w) {
            if (w == c || w == p || w == i || !m.adjacent(c, w)) continue;
            bool collider = m.end(p, c) == Mark::arrow && m.end(w, c) == Mark::arrow;
            bool triangle = m.adjacent(p, w);
            if (!collider && !triangle) continue;
            if (visited[static_cast<std::size_t>(c) * n + w]) continue;
            visited[static_cast<std::size_t>(c) * n + w] = 1;
            queue.emplace_back(c, w);
            out.insert(w);
        }
    }
    return out;
}

}  // namespace engine

namespace {

MarkMatrix complete_circle_graph(int n) {
    MarkMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set_edge(i, j, Mark::circle, Mark::circle);
    return m;
}

bool is_context_pair(const NodeSet& contexts, int i, int j) {
    return contexts.contains(i) && contexts.contains(j);
}

void adjacency_search(MarkMatrix& m, SepSets& seps, const IndependenceOracle& oracle,
                      bool exempt_context_pairs, const NodeSet& contexts) {
    const int n = m.node_count();
    for (int depth = 0;; ++depth) {
        bool candidates_left = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !m.adjacent(i, j)) continue;
                if (exempt_context_pairs && is_context_pair(contexts, i, j)) continue;
                auto cand = (m.adjacency(i) - NodeSet::single(j)).to_vector();
                if (static_cast<int>(cand.size()) < depth) continue;
                candidates_left = true;
                for_each_combination(cand, depth, [&](const NodeSet& z) {
                    if (!oracle.independent(i, j, z)) return false;
                    m.remove_edge(i, j);
                    seps.set(i, j, z);
                    return true;
                });
            }
        if (!candidates_left) break;
    }
}

void possible_d_sep_prune(MarkMatrix& m, SepSets& seps, const IndependenceOracle& oracle,
                          bool exempt_context_pairs, const NodeSet& contexts) {
    const int n = m.node_count();
    std::vector<NodeSet> pds(n);
    for (int i = 0; i < n; ++i) pds[i] = engine::possible_d_sep(m, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !m.adjacent(i, j)) continue;
            if (exempt_context_pairs && is_context_pair(contexts, i, j)) continue;
            auto cand = (pds[i] - NodeSet::single(j)).to_vector();
            for_each_subset(cand, [&](const NodeSet& z) {
                if (!oracle.independent(i, j, z)) return false;
                m.remove_edge(i, j);
                seps.set(i, j, z);
                return true;
            });
        }
}

void reset_to_circles(MarkMatrix& m) {
    const int n = m.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.adjacent(i, j)) m.set_edge(i, j, Mark::circle, Mark::circle);
}

// Orientations implied by the JCI assumptions: arrowheads at the system end
// of every surviving context-system edge (assumption 1), tails at the context
// end as well (assumptions 1+2), bidirected context-context edges
// (assumptions 1+2+3).
void apply_jci_orientations(engine::Orienter& o, const NodeSet& contexts, unsigned subset) {
    const int n = o.marks().node_count();
    if (subset == 0) return;
    for (int k : contexts)
        for (int x = 0; x < n; ++x) {
            if (contexts.contains(x)) continue;
            if (!o.marks().adjacent(k, x)) continue;
            o.orient_end(k, x, Mark::arrow, RuleId::bk);
            if (subset & 2u) o.orient_end(x, k, Mark::tail, RuleId::bk);
        }
    if (subset & 4u) {
        for (int k : contexts)
            for (int k2 : contexts) {
                if (k >= k2) continue;
                if (!o.marks().adjacent(k, k2)) continue;
                o.orient_edge(k, k2, Mark::arrow, Mark::arrow, RuleId::bk);
            }
    }
}

void check_universe(const IndependenceOracle& oracle, const std::vector<std::string>& universe) {
    if (oracle.universe_names() != universe)
        throw Error(ErrorCode::universe_mismatch, "oracle universe does not match the given one");
}

}  // namespace

DiscoveryResult fci(const IndependenceOracle& oracle, const std::vector<std::string>& universe,
                    const BackgroundKnowledge& bk) {
    check_universe(oracle, universe);
    const int n = static_cast<int>(universe.size());
    const bool jci = bk.kind() == BackgroundKnowledge::Kind::jci;
    const NodeSet contexts = jci ? bk.context_nodes() : NodeSet{};
    if (jci && !contexts.is_subset_of(NodeSet::all(n)))
        throw Error(ErrorCode::unknown_node, "context nodes outside the universe");
    const unsigned subset = jci ? bk.jci_subset() : 0u;
    const bool exempt_ctx = jci && (subset & 4u);

    MarkMatrix m = complete_circle_graph(n);
    SepSets seps;
    adjacency_search(m, seps, oracle, exempt_ctx, contexts);

    // Second pruning pass over possible-d-sep sets, computed on the interim
    // collider orientations. All orientations are then reset.
    {
        engine::Orienter interim(m, &seps);
        if (jci) apply_jci_orientations(interim, contexts, subset);
        interim.apply_r0();
        MarkMatrix pruned = interim.marks();
        possible_d_sep_prune(pruned, seps, oracle, exempt_ctx, contexts);
        m = pruned;
        reset_to_circles(m);
    }

    engine::Orienter o(m, &seps);
    if (jci) apply_jci_orientations(o, contexts, subset);
    o.apply_r0();
    o.run_arrowhead_stage();
    o.run_tail_stage();
    if (o.any_rule_fires())
        throw Error(ErrorCode::oracle_inconsistent, "orientation rules did not reach a fixpoint");
    return {Dpag(universe, o.marks()), std::move(seps), std::move(o.trace())};
}

DiscoveryResult pc_meek(const IndependenceOracle& oracle, const std::vector<std::string>& universe) {
    check_universe(oracle, universe);
    const int n = static_cast<int>(universe.size());
    MarkMatrix m = complete_circle_graph(n);
    SepSets seps;
    adjacency_search(m, seps, oracle, false, {});
    engine::Orienter o(m, &seps);
    o.apply_r0_cpdag();
    o.run_meek();
    return {Dpag(universe, o.marks()), std::move(seps), std::move(o.trace())};
}

DiscoveryResult fci_jci(const IndependenceOracle& oracle, const std::vector<std::string>& universe,
                        NodeSet context_nodes, unsigned jci_subset) {
    return fci(oracle, universe, BackgroundKnowledge::jci(jci_subset, context_nodes));
}

bool trace_replays(const DiscoveryResult& result) {
    const int n = result.dpag.node_count();
    MarkMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (result.dpag.adjacent(i, j)) m.set_edge(i, j, Mark::circle, Mark::circle);
    for (const auto& ev : result.trace) {
        if (!m.adjacent(ev.a, ev.b)) return false;
        m.set_edge(ev.a, ev.b, ev.at_a, ev.at_b);
    }
    return m == result.dpag.marks();
}

}  // namespace causaldisc
