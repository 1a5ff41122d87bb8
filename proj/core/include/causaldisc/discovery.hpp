#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"
#include "causaldisc/oracle.hpp"
#include "causaldisc/types.hpp"

namespace causaldisc {

enum class RuleId : std::uint8_t { bk, r0, r1, r2a, r2b, r3, r4a, r4b, r8a, r9, r10, m1, m2, m3 };

const char* rule_name(RuleId r);

/// One orientation step: the edge (a, b) now carries the given end marks.
struct TraceEvent {
    RuleId rule;
    int a, b;
    Mark at_a, at_b;
    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Separating sets recorded when pairs were removed from the skeleton.
/// At most one entry per unordered pair, the first set the search found.
class SepSets {
public:
    void set(int i, int j, const NodeSet& z);
    std::optional<NodeSet> find(int i, int j) const;
    std::size_t size() const { return map_.size(); }
    const std::map<std::pair<int, int>, NodeSet>& entries() const { return map_; }

private:
    std::map<std::pair<int, int>, NodeSet> map_;
};

/// Assumed restriction on the ground-truth graph, plus how the discovery
/// algorithms exploit it. Only the JCI variant changes algorithm behavior;
/// the others restrict the graph family without altering the mapping.
class BackgroundKnowledge {
public:
    enum class Kind : std::uint8_t { none, acyclicity, causal_sufficiency, jci };

    static BackgroundKnowledge none() { return BackgroundKnowledge(Kind::none); }
    static BackgroundKnowledge acyclicity() { return BackgroundKnowledge(Kind::acyclicity); }
    static BackgroundKnowledge causal_sufficiency() {
        return BackgroundKnowledge(Kind::causal_sufficiency);
    }
    /// subset is a bitmask: bit 0 = assumption 1, bit 1 = assumption 2,
    /// bit 2 = assumption 3. Valid values: {}, {1}, {1,2}, {1,2,3}.
    static BackgroundKnowledge jci(unsigned subset, NodeSet context_nodes);

    Kind kind() const { return kind_; }
    unsigned jci_subset() const { return jci_subset_; }
    NodeSet context_nodes() const { return context_nodes_; }

    /// The predicate on ground-truth graphs this knowledge encodes.
    bool check(const Dmg& g) const;

private:
    explicit BackgroundKnowledge(Kind k) : kind_(k) {}
    Kind kind_;
    unsigned jci_subset_ = 0;
    NodeSet context_nodes_;
};

struct DiscoveryResult {
    Dpag dpag;
    SepSets sepsets;
    std::vector<TraceEvent> trace;
};

/// FCI as a map from independence models to DPAGs: adjacency search,
/// possible-d-sep pruning, collider orientation, then the arrowhead and tail
/// rule stages. Orientation conflicts (overwriting an arrow with a tail or
/// vice versa) raise oracle_inconsistent.
DiscoveryResult fci(const IndependenceOracle& oracle, const std::vector<std::string>& universe,
                    const BackgroundKnowledge& bk = BackgroundKnowledge::none());

/// PC with Meek's orientation rules; the output CPDAG is reported as a DPAG
/// with undirected edges as circle-circle.
DiscoveryResult pc_meek(const IndependenceOracle& oracle, const std::vector<std::string>& universe);

/// FCI with the JCI background-knowledge encoding for the given assumption
/// subset (must be {}, {1}, {1,2} or {1,2,3}).
DiscoveryResult fci_jci(const IndependenceOracle& oracle, const std::vector<std::string>& universe,
                        NodeSet context_nodes, unsigned jci_subset);

/// Literal check of the JCI assumption clauses in `subset` on g.
bool check_jci_assumptions(const Dmg& g, NodeSet context_nodes, unsigned subset);

/// Replays result.trace from the all-circles skeleton and compares with the
/// recorded DPAG.
bool trace_replays(const DiscoveryResult& result);

namespace engine {

/// Mutable orientation state shared by the FCI/PC rule implementations.
/// Exposed so the individual rewrite rules can be unit-tested in isolation.
class Orienter {
public:
    Orienter(MarkMatrix m, const SepSets* sepsets) : m_(std::move(m)), sepsets_(sepsets) {}

    MarkMatrix& marks() { return m_; }
    const MarkMatrix& marks() const { return m_; }
    std::vector<TraceEvent>& trace() { return trace_; }

    /// Sets the mark at b on edge (a, b); no-op if already set, error if it
    /// would overwrite an arrow with a tail or vice versa.
    void orient_end(int a, int b, Mark at_b, RuleId rule);
    /// Orients the full edge in one event.
    void orient_edge(int a, int b, Mark at_a, Mark at_b, RuleId rule);

    // R0: unshielded triple a *-* c *-* b with c outside sepset(a, b)
    // becomes a collider a *-> c <-* b.
    bool apply_r0();
    // R0 in CPDAG vocabulary: colliders become fully directed a -> c <- b.
    bool apply_r0_cpdag();
    // R1: a *-> b o-* c, a and c non-adjacent: orient b -> c.
    bool apply_r1();
    // R2a: a -> b *-> c with a *-o c: orient arrowhead a *-> c.
    bool apply_r2a();
    // R2b: a *-> b -> c with a *-o c: orient arrowhead a *-> c.
    bool apply_r2b();
    // R3: a *-> b <-* c, a *-o d o-* c, a and c non-adjacent, d *-o b:
    // orient arrowhead d *-> b.
    bool apply_r3();
    // R4: discriminating path from x to j for k with k o-* j. If k lies in
    // sepset(x, j), orient k -> j (r4a); otherwise orient the triple
    // m <-> k <-> j (r4b).
    bool apply_r4();
    // R8a: k o-> i with a chain k -> m -> i: orient k -> i.
    bool apply_r8a();
    // R9: k o-> i with an uncovered possibly directed path k, m, ..., i
    // where m and i are non-adjacent: orient k -> i.
    bool apply_r9();
    // R10: k o-> i, u -> i <- w, uncovered possibly directed paths from k
    // to u and to w whose first steps are distinct and non-adjacent:
    // orient k -> i.
    bool apply_r10();

    /// R1-R4 round-robin to fixpoint.
    void run_arrowhead_stage();
    /// All of R9, then R8a/R10 to fixpoint.
    void run_tail_stage();
    /// True iff some rule would still fire; discovery asserts this is false.
    bool any_rule_fires();

    // Meek rules on a CPDAG-style matrix (directed or circle-circle edges).
    bool apply_meek1();
    bool apply_meek2();
    bool apply_meek3();
    void run_meek();

private:
    bool r4_for_pair(int k, int j);
    MarkMatrix m_;
    const SepSets* sepsets_;
    std::vector<TraceEvent> trace_;
};

/// Mark-aware path utilities shared by the tail rules and the identification
/// criteria. An edge is traversable from u when its mark at u is not an arrow.
bool pd_reachable(const MarkMatrix& m, int from, int to, bool avoid_direct_edge = false);
/// First steps m for which an uncovered possibly directed path from, m, ..., to exists.
NodeSet uncovered_pd_first_steps(const MarkMatrix& m, int from, int to);

/// Nodes reachable from i by paths on which every triple is a collider or a
/// triangle; the candidate pool for the second skeleton pruning stage.
NodeSet possible_d_sep(const MarkMatrix& m, int i);

}  // namespace engine

}  // namespace causaldisc
