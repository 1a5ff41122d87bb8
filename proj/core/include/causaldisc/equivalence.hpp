#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "causaldisc/discovery.hpp"
#include "causaldisc/dmg.hpp"
#include "causaldisc/random.hpp"
#include "causaldisc/separation.hpp"

namespace causaldisc {

/// Family of labeled DMGs over n nodes. Each unordered pair carries one of
/// eight edge states (presence of lo->hi, hi->lo, lo<->hi); constraints act
/// as filters. JCI families fix context nodes at the lowest indices and
/// enumerate graphs satisfying the full assumption set.
struct GraphFamily {
    int n = 0;
    bool allow_bidirected = true;
    bool acyclic_only = false;
    std::optional<int> jci_context_count;

    std::vector<std::string> node_names() const;
    NodeSet context_nodes() const;
};

/// Number of raw edge-state vectors (before constraint filtering).
std::uint64_t family_state_count(const GraphFamily& family, std::uint64_t cap = 1u << 19);

/// Decodes one edge-state vector; nullopt if the graph fails the filters.
std::optional<Dmg> family_decode(const GraphFamily& family, std::uint64_t id);

/// Visits every family member exactly once in id order.
void enumerate_dmgs(const GraphFamily& family, const std::function<void(const Dmg&, std::uint64_t)>& fn,
                    std::uint64_t cap = 1u << 19);

/// Seeded family member for sampled checks on sizes beyond the cap.
Dmg sample_family_member(const GraphFamily& family, Rng& rng);

struct MecClass {
    std::vector<std::uint64_t> graph_ids;
    Dpag representative;
};

struct MecPartition {
    std::vector<MecClass> classes;
};

/// Partition of the family by pairwise independence-model equality; the
/// representative DPAG is the discovery output of each class's first member.
MecPartition mec_partition(const GraphFamily& family, Criterion crit);

struct EquivCounterexample {
    std::uint64_t id1 = 0, id2 = 0;
    Dmg graph1, graph2;
    std::string reason;
};

struct EquivReport {
    bool ok = true;
    std::uint64_t graphs_checked = 0;
    std::uint64_t class_count = 0;
    std::vector<EquivCounterexample> counterexamples;
};

/// For every pair of family members: equal independence models iff equal
/// discovery outputs. Parallelizes across graphs; results are deterministic.
EquivReport verify_markov_completeness(const GraphFamily& family, Criterion crit, int workers = 1);

/// Sampled variant for families beyond the enumeration cap.
EquivReport verify_markov_completeness_sampled(const GraphFamily& family, Criterion crit,
                                               int samples, std::uint64_t seed, int workers = 1);

enum class Algorithm : std::uint8_t { fci, pc_meek, fci_jci };

const char* algorithm_name(Algorithm a);

/// For every family member satisfying the background knowledge: the chosen
/// algorithm's output contains it. Also validates that the knowledge is
/// compatible with acyclification (a knowledge-preserving acyclification
/// exists, ancestries are realizable in one, non-ancestries are preserved).
EquivReport verify_background_soundness(const GraphFamily& family, const BackgroundKnowledge& psi,
                                        Algorithm algo, int samples = 0, std::uint64_t seed = 1);

}  // namespace causaldisc
