#include "causaldisc/dmg.hpp"

#include <algorithm>

namespace causaldisc {

Dmg::Dmg(std::vector<std::string> names,
         const std::vector<std::pair<int, int>>& directed,
         const std::vector<std::pair<int, int>>& bidirected)
    : n_(static_cast<int>(names.size())), names_(std::move(names)) {
    if (n_ > NodeSet::max_nodes)
        throw Error(ErrorCode::validation_error,
                    "graphs are limited to " + std::to_string(NodeSet::max_nodes) + " nodes");
    for (int i = 0; i < n_; ++i) {
        if (names_[i].empty())
            throw Error(ErrorCode::validation_error, "empty node name at index " + std::to_string(i));
        for (int j = i + 1; j < n_; ++j)
            if (names_[i] == names_[j])
                throw Error(ErrorCode::validation_error, "duplicate node name '" + names_[i] + "'");
    }

    parents_.assign(n_, {});
    children_.assign(n_, {});
    bidir_.assign(n_, {});

    for (auto [i, j] : directed) {
        check_node(i);
        check_node(j);
        if (i == j) throw Error(ErrorCode::self_loop, "self-loop at node '" + names_[i] + "'");
        if (children_[i].contains(j))
            throw Error(ErrorCode::duplicate_edge,
                        "duplicate directed edge " + names_[i] + " -> " + names_[j]);
        children_[i].insert(j);
        parents_[j].insert(i);
    }
    for (auto [i, j] : bidirected) {
        check_node(i);
        check_node(j);
        if (i == j) throw Error(ErrorCode::self_loop, "self-loop at node '" + names_[i] + "'");
        if (bidir_[i].contains(j))
            throw Error(ErrorCode::duplicate_edge,
                        "duplicate bidirected edge " + names_[i] + " <-> " + names_[j]);
        bidir_[i].insert(j);
        bidir_[j].insert(i);
    }

    // Canonical sorted edge lists, independent of input order.
    for (int i = 0; i < n_; ++i)
        for (int j : children_[i]) directed_.emplace_back(i, j);
    for (int i = 0; i < n_; ++i)
        for (int j : bidir_[i])
            if (i < j) bidirected_.emplace_back(i, j);

    // Reachability closures by per-node BFS over the directed part.
    anc_.assign(n_, {});
    desc_.assign(n_, {});
    for (int s = 0; s < n_; ++s) {
        NodeSet seen = NodeSet::single(s);
        NodeSet frontier = seen;
        while (!frontier.empty()) {
            NodeSet next;
            for (int v : frontier) next |= children_[v];
            frontier = next - seen;
            seen |= next;
        }
        desc_[s] = seen;
    }
    for (int s = 0; s < n_; ++s) {
        NodeSet seen = NodeSet::single(s);
        NodeSet frontier = seen;
        while (!frontier.empty()) {
            NodeSet next;
            for (int v : frontier) next |= parents_[v];
            frontier = next - seen;
            seen |= next;
        }
        anc_[s] = seen;
    }

    scc_.resize(n_);
    scc_id_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
        scc_[i] = anc_[i] & desc_[i];
        if (scc_[i].size() > 1) acyclic_ = false;
    }
    for (int i = 0; i < n_; ++i) {
        if (scc_id_[i] >= 0) continue;
        for (int j : scc_[i]) scc_id_[j] = scc_total_;
        ++scc_total_;
    }
}

int Dmg::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

NodeSet Dmg::ancestors(const NodeSet& s) const {
    NodeSet out;
    for (int i : s) out |= ancestors(i);
    return out;
}

NodeSet Dmg::descendants(const NodeSet& s) const {
    NodeSet out;
    for (int i : s) out |= descendants(i);
    return out;
}

Dmg build_dmg(std::vector<std::string> names,
              const std::vector<std::pair<int, int>>& directed,
              const std::vector<std::pair<int, int>>& bidirected) {
    return Dmg(std::move(names), directed, bidirected);
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

}  // namespace causaldisc
