#pragma once

#include <string>
#include <utility>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"

namespace testsupport {

using causaldisc::Dmg;
using causaldisc::Dpag;
using causaldisc::Mark;
using causaldisc::MarkMatrix;

// Ten-node cyclic example with one feedback loop {X3,X4,X5,X6} and one
// latent confounder X1 <-> X3; the repository's golden instance.
inline Dmg cyclic10_graph() {
    auto names = causaldisc::default_names(10);
    auto ix = [](int k) { return k - 1; };
    std::vector<std::pair<int, int>> dir = {
        {ix(10), ix(1)}, {ix(8), ix(2)}, {ix(9), ix(2)}, {ix(2), ix(4)}, {ix(3), ix(4)},
        {ix(4), ix(6)},  {ix(6), ix(5)}, {ix(5), ix(3)}, {ix(6), ix(7)},
    };
    std::vector<std::pair<int, int>> bidir = {{ix(1), ix(3)}};
    return Dmg(names, dir, bidir);
}

// The complete DPAG discovery must produce for cyclic10_graph.
inline Dpag cyclic10_dpag() {
    auto names = causaldisc::default_names(10);
    MarkMatrix m(10);
    auto ix = [](int k) { return k - 1; };
    auto set = [&](int a, int b, Mark at_a, Mark at_b) { m.set_edge(ix(a), ix(b), at_a, at_b); };
    set(10, 1, Mark::circle, Mark::arrow);
    set(8, 2, Mark::circle, Mark::arrow);
    set(9, 2, Mark::circle, Mark::arrow);
    for (int s : {3, 4, 5, 6}) set(1, s, Mark::arrow, Mark::arrow);
    for (int s : {3, 4, 5, 6}) set(2, s, Mark::tail, Mark::arrow);
    set(3, 4, Mark::circle, Mark::circle);
    set(3, 5, Mark::circle, Mark::circle);
    set(3, 6, Mark::circle, Mark::circle);
    set(4, 5, Mark::circle, Mark::circle);
    set(4, 6, Mark::circle, Mark::circle);
    set(5, 6, Mark::circle, Mark::circle);
    set(6, 7, Mark::tail, Mark::arrow);
    return Dpag(names, std::move(m));
}

struct NamedDag {
    std::string name;
    int n;
    std::vector<std::pair<int, int>> edges;

    Dmg graph() const { return Dmg(causaldisc::default_names(n), edges, {}); }
};

// Small classic structures used to pin down PC's output.
inline std::vector<NamedDag> textbook_dags() {
    return {
        {"chain4", 4, {{0, 1}, {1, 2}, {2, 3}}},
        {"collider_tail", 4, {{0, 2}, {1, 2}, {2, 3}}},
        {"diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}},
        {"fork", 4, {{0, 1}, {0, 2}, {0, 3}}},
        {"chain_collider4", 4, {{0, 1}, {1, 2}, {3, 2}}},
        {"cancer5", 5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}},
        {"mbias5", 5, {{0, 1}, {0, 2}, {3, 2}, {3, 4}}},
        {"y5", 5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}}},
        {"complete4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
        {"wide5", 5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {0, 1}}},
    };
}

}  // namespace testsupport
