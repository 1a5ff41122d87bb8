#pragma once

// Brute-force reference implementations, kept independent of the library's
// search-based code paths. Everything here enumerates explicitly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"
#include "causaldisc/separation.hpp"
#include "causaldisc/walk.hpp"

namespace testsupport {

using causaldisc::Criterion;
using causaldisc::Dmg;
using causaldisc::EdgeUse;
using causaldisc::NodeSet;
using causaldisc::Walk;

// All simple paths between a and b, every edge choice spelled out.
inline std::vector<Walk> enumerate_paths(const Dmg& g, int a, int b) {
    std::vector<Walk> out;
    if (a == b) {
        out.push_back(Walk::trivial(a));
        return out;
    }
    struct Frame {
        Walk walk;
        NodeSet visited;
    };
    std::vector<Frame> stack{{Walk::trivial(a), NodeSet::single(a)}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        int u = f.walk.last();
        for (int v = 0; v < g.node_count(); ++v) {
            if (f.visited.contains(v)) continue;
            auto push = [&](EdgeUse use) {
                Frame nf = f;
                nf.walk.step(v, use);
                nf.visited.insert(v);
                if (v == b)
                    out.push_back(nf.walk);
                else
                    stack.push_back(nf);
            };
            if (g.has_directed(u, v)) push(EdgeUse::directed_to);
            if (g.has_directed(v, u)) push(EdgeUse::directed_from);
            if (g.has_bidirected(u, v)) push(EdgeUse::bidirected);
        }
    }
    return out;
}

// Separation by explicit path enumeration plus the public walk-blocking test.
inline bool path_enum_separated(const Dmg& g, int a, int b, const NodeSet& c, Criterion crit) {
    for (const Walk& w : enumerate_paths(g, a, b))
        if (!causaldisc::walk_blocked(g, w, c, crit)) return false;
    return true;
}

// True iff no conditioning set separates i from j.
inline bool no_separating_set(const Dmg& g, int i, int j, Criterion crit) {
    const int n = g.node_count();
    for (std::uint64_t zb = 0; zb < (std::uint64_t{1} << n); ++zb) {
        if ((zb >> i) & 1u) continue;
        if ((zb >> j) & 1u) continue;
        if (causaldisc::separated(g, NodeSet::single(i), NodeSet::single(j), NodeSet(zb), crit))
            return false;
    }
    return true;
}

// Same but with the path-enumeration separation test; fully brute force.
inline bool no_separating_set_brute(const Dmg& g, int i, int j, Criterion crit) {
    const int n = g.node_count();
    for (std::uint64_t zb = 0; zb < (std::uint64_t{1} << n); ++zb) {
        if ((zb >> i) & 1u) continue;
        if ((zb >> j) & 1u) continue;
        if (path_enum_separated(g, i, j, NodeSet(zb), crit)) return false;
    }
    return true;
}

// Inducing-path existence by checking the defining clauses on every path.
inline bool inducing_path_by_enumeration(const Dmg& g, int i, int j) {
    for (const Walk& w : enumerate_paths(g, i, j))
        if (causaldisc::is_inducing_path(g, w, i, j)) return true;
    return false;
}

// ---- CPDAG ground truth by DAG enumeration -------------------------------

// Directed adjacency encoded as n*n bitmask; acyclic members only. DAGs have
// at most one arc per pair, so enumeration runs over per-pair states
// {none, lo->hi, hi->lo}.
inline const std::vector<std::uint64_t>& all_dag_masks(int n) {
    static std::vector<std::uint64_t> cache[8];
    auto& dags = cache[n];
    if (!dags.empty()) return dags;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t mask = 0;
        std::uint64_t c = code;
        for (auto [i, j] : pairs) {
            int s = static_cast<int>(c % 3);
            c /= 3;
            if (s == 1) mask |= std::uint64_t{1} << (i * n + j);
            if (s == 2) mask |= std::uint64_t{1} << (j * n + i);
        }
        // acyclicity via repeated sink elimination
        NodeSet alive = NodeSet::all(n);
        bool progress = true;
        while (progress && !alive.empty()) {
            progress = false;
            for (int i : alive) {
                bool sink = true;
                for (int j : alive)
                    if (j != i && ((mask >> (i * n + j)) & 1u)) sink = false;
                if (sink) {
                    alive.erase(i);
                    progress = true;
                    break;
                }
            }
        }
        if (alive.empty()) dags.push_back(mask);
    }
    return dags;
}

struct DagPattern {
    std::uint64_t skeleton = 0;                        // symmetric pair bits
    std::set<std::tuple<int, int, int>> v_structures;  // (min, max, collider)
};

inline DagPattern dag_pattern(std::uint64_t mask, int n) {
    DagPattern p;
    auto arc = [&](int i, int j) { return ((mask >> (i * n + j)) & 1u) != 0; };
    auto adj = [&](int i, int j) { return arc(i, j) || arc(j, i); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (arc(i, j)) p.skeleton |= std::uint64_t{1} << (std::min(i, j) * n + std::max(i, j));
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (a == c || b == c) continue;
                if (arc(a, c) && arc(b, c) && !adj(a, b)) p.v_structures.insert({a, b, c});
            }
    return p;
}

// CPDAG of a DAG as a DPAG: enumerate every DAG with the same skeleton and
// v-structures (the classic equivalence characterization); an edge direction
// is kept iff it is shared by all of them, otherwise it turns circle-circle.
inline causaldisc::Dpag brute_force_cpdag(const Dmg& dag) {
    const int n = dag.node_count();
    std::uint64_t mask = 0;
    for (auto [i, j] : dag.directed_edges()) mask |= std::uint64_t{1} << (i * n + j);
    DagPattern target = dag_pattern(mask, n);
    std::uint64_t always = ~std::uint64_t{0}, ever = 0;
    for (std::uint64_t cand : all_dag_masks(n)) {
        DagPattern p = dag_pattern(cand, n);
        if (p.skeleton != target.skeleton || p.v_structures != target.v_structures) continue;
        always &= cand;
        ever |= cand;
    }
    causaldisc::MarkMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!((target.skeleton >> (i * n + j)) & 1u)) continue;
            bool fwd = (always >> (i * n + j)) & 1u;
            bool bwd = (always >> (j * n + i)) & 1u;
            if (fwd)
                m.set_edge(i, j, causaldisc::Mark::tail, causaldisc::Mark::arrow);
            else if (bwd)
                m.set_edge(i, j, causaldisc::Mark::arrow, causaldisc::Mark::tail);
            else
                m.set_edge(i, j, causaldisc::Mark::circle, causaldisc::Mark::circle);
        }
    (void)ever;
    return causaldisc::Dpag(dag.names(), std::move(m));
}

}  // namespace testsupport
