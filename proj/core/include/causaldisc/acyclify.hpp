#pragma once

#include <cstdint>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"

namespace causaldisc {

/// An ADMG over the source graph's nodes in which every strongly connected
/// component has been replaced by a fully connected acyclic block, with edges
/// into a component copied to all of its members.
struct Acyclification {
    enum class Provenance { canonical, sampled };
    Dmg graph;
    Provenance provenance;
    std::uint64_t seed = 0;
};

/// Components become fully bidirected blocks, no intra-component directed edges.
Acyclification canonical_acyclification(const Dmg& g);

/// Components become tournaments over seeded per-component orders; optional
/// extra intra-component bidirected edges with the given density. The order
/// generator is keyed by (seed, smallest component member) so results are
/// reproducible across platforms.
Acyclification sample_acyclification(const Dmg& g, std::uint64_t seed,
                                     double intra_bidirected_density = 0.0);

/// Acyclification whose intra-component tournaments follow the given total
/// orders (one per non-singleton component, any order of components).
Dmg acyclification_from_orders(const Dmg& g, const std::vector<std::vector<int>>& scc_orders);

/// For i an ancestor of j, builds an acyclification preserving that ancestry
/// by ordering each component along a directed witness path.
Acyclification ancestor_witness_acyclification(const Dmg& g, int i, int j);

/// Validates the three defining clauses of an acyclification of g.
bool is_acyclification(const Dmg& g, const Dmg& h);

/// Maximal ancestral graph induced by an acyclic mixed graph: u and v are
/// adjacent iff an inducing path joins them, oriented by ancestry.
Dmag dmag_of_admg(const Dmg& h);

}  // namespace causaldisc
