#pragma once

#include <string>
#include <utility>
#include <vector>

#include "causaldisc/discovery.hpp"
#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"

namespace causaldisc::identify {

/// Tag a caller passes to assert that a bare DPAG is a complete discovery
/// output (all unshielded colliders oriented, rules exhausted). The criteria
/// guarded by it are unsound on arbitrary DPAGs.
struct Attested {};

/// Containment of a ground-truth mixed graph in a DPAG: adjacency iff an
/// inducing path exists, arrowheads only at non-ancestors, tails only at
/// ancestors.
bool contains(const Dpag& p, const Dmg& g);

/// i is an ancestor of j in every graph the DPAG contains: a directed path,
/// or two uncovered possibly directed paths whose first steps are distinct
/// and non-adjacent.
bool identified_ancestor(const Dpag& p, int i, int j, Attested);
bool identified_ancestor(const DiscoveryResult& r, int i, int j);

/// No possibly directed path from i to j: i is an ancestor of j in no
/// contained graph.
bool identified_non_ancestor(const Dpag& p, int i, int j);

/// A directed edge i -> j certified unconfounded by an external
/// arrowhead-bearing structure: some k non-adjacent to j with an edge into i,
/// or a collider path into i whose colliders are all parents of j.
bool definitely_visible(const Dpag& p, int i, int j);

/// The pair carries no bidirected edge in any contained graph: non-adjacent,
/// or joined by a definitely visible directed edge.
bool identified_unconfounded(const Dpag& p, int i, int j);

/// The edge i -> j is absent from every contained graph.
bool identified_non_direct_cause(const Dpag& p, int i, int j);

/// The edge i -> j is present in every contained graph. Requires i -> j in p.
bool identified_direct_cause(const Dpag& p, int i, int j);

/// Pairs that may lie on a common cycle: circle-circle edge with matching
/// edge types into both ends from every third node. All other pairs are
/// identified non-cycles.
std::vector<std::pair<int, int>> possibly_cyclic_pairs(const Dpag& p, Attested);
std::vector<std::pair<int, int>> possibly_cyclic_pairs(const DiscoveryResult& r);

/// For an eligible pair, two witnesses in the same Markov equivalence class:
/// a graph with an i-j cycle and an acyclic maximal ancestral graph.
struct CycleWitnesses {
    Dmg cyclic;
    Dmg acyclic;
};
CycleWitnesses cycle_witnesses(const Dpag& p, int i, int j, Attested);
CycleWitnesses cycle_witnesses(const DiscoveryResult& r, int i, int j);

enum class ClaimKind : std::uint8_t {
    ancestor,
    non_ancestor,
    unconfounded,
    direct_cause,
    non_direct_cause,
    non_cycle,
    direct_target,
    non_target,
};

const char* claim_kind_name(ClaimKind k);

/// A single identified causal feature with its justification.
struct FeatureClaim {
    ClaimKind kind;
    int i, j;
    std::string rule;
    std::vector<std::vector<int>> witness_paths;
};

/// Direct intervention target and non-target claims read off a DPAG produced
/// under the full JCI assumption set.
std::vector<FeatureClaim> jci_direct_targets(const Dpag& p, const NodeSet& context_nodes,
                                             const NodeSet& system_nodes, Attested);
std::vector<FeatureClaim> jci_direct_targets(const DiscoveryResult& r, const NodeSet& context_nodes,
                                             const NodeSet& system_nodes);

/// Possibly cyclic pairs restricted to system-system pairs.
std::vector<std::pair<int, int>> jci_possibly_cyclic_pairs(const Dpag& p, const NodeSet& context_nodes,
                                                           Attested);
std::vector<std::pair<int, int>> jci_possibly_cyclic_pairs(const DiscoveryResult& r,
                                                           const NodeSet& context_nodes);

/// Every claim the criteria above support, for reporting.
std::vector<FeatureClaim> all_claims(const DiscoveryResult& r);

/// Arrowhead-completeness shape every emitted DPAG must satisfy: a *-> b o-* c
/// forces an edge a *-> c, and a -> b o-* c forbids a <-> c.
bool satisfies_arrowhead_shape(const Dpag& p);

}  // namespace causaldisc::identify
