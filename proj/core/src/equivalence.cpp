#include "causaldisc/equivalence.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "causaldisc/acyclify.hpp"
#include "causaldisc/identify.hpp"
#include "causaldisc/oracle.hpp"

namespace causaldisc {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::fci: return "fci";
        case Algorithm::pc_meek: return "pc";
        case Algorithm::fci_jci: return "jci";
    }
    return "?";
}

std::vector<std::string> GraphFamily::node_names() const {
    const int contexts = jci_context_count.value_or(0);
    std::vector<std::string> names;
    for (int k = 1; k <= contexts; ++k) names.push_back("C" + std::to_string(k));
    for (int k = 1; k <= n - contexts; ++k) names.push_back("X" + std::to_string(k));
    return names;
}

NodeSet GraphFamily::context_nodes() const { return NodeSet::all(jci_context_count.value_or(0)); }

namespace {

int states_per_pair(const GraphFamily& f) { return f.allow_bidirected ? 8 : 4; }

int pair_count(int n) { return n * (n - 1) / 2; }

// Edge-state bits per pair (lo < hi): bit 0 = lo->hi, bit 1 = hi->lo, bit 2 = lo<->hi.
std::optional<Dmg> decode_states(const GraphFamily& f, const std::vector<int>& states) {
    std::vector<std::pair<int, int>> dir, bidir;
    int p = 0;
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j, ++p) {
            int s = states[p];
            if (s & 1) dir.emplace_back(i, j);
            if (s & 2) dir.emplace_back(j, i);
            if (s & 4) bidir.emplace_back(i, j);
        }
    Dmg g(f.node_names(), dir, bidir);
    if (f.acyclic_only && !g.is_acyclic()) return std::nullopt;
    if (f.jci_context_count && !check_jci_assumptions(g, f.context_nodes(), 7u)) return std::nullopt;
    return g;
}

}  // namespace

std::uint64_t family_state_count(const GraphFamily& family, std::uint64_t cap) {
    if (family.n < 0 || family.n > NodeSet::max_nodes)
        throw Error(ErrorCode::cap_exceeded, "node count out of range");
    const int base = states_per_pair(family);
    std::uint64_t count = 1;
    for (int p = 0; p < pair_count(family.n); ++p) {
        if (count > cap / base + 1) throw Error(ErrorCode::cap_exceeded, "family too large to enumerate");
        count *= base;
    }
    if (count > cap) throw Error(ErrorCode::cap_exceeded, "family too large to enumerate");
    return count;
}

std::optional<Dmg> family_decode(const GraphFamily& family, std::uint64_t id) {
    const int base = states_per_pair(family);
    std::vector<int> states(pair_count(family.n));
    for (auto& s : states) {
        s = static_cast<int>(id % base);
        id /= base;
    }
    return decode_states(family, states);
}

void enumerate_dmgs(const GraphFamily& family, const std::function<void(const Dmg&, std::uint64_t)>& fn,
                    std::uint64_t cap) {
    const std::uint64_t total = family_state_count(family, cap);
    for (std::uint64_t id = 0; id < total; ++id)
        if (auto g = family_decode(family, id)) fn(*g, id);
}

Dmg sample_family_member(const GraphFamily& family, Rng& rng) {
    const int base = states_per_pair(family);
    std::vector<int> states(pair_count(family.n));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        for (auto& s : states) s = static_cast<int>(rng.next_below(base));
        if (auto g = decode_states(family, states)) return *g;
    }
    throw Error(ErrorCode::cap_exceeded, "family constraints rejected too many samples");
}

namespace {

DiscoveryResult run_algorithm(Algorithm algo, const Dmg& g, Criterion crit, const GraphFamily& family) {
    GraphOracle oracle = graph_oracle(g, crit);
    switch (algo) {
        case Algorithm::fci: return fci(oracle, g.names());
        case Algorithm::pc_meek: return pc_meek(oracle, g.names());
        case Algorithm::fci_jci: return fci_jci(oracle, g.names(), family.context_nodes(), 7u);
    }
    throw Error(ErrorCode::validation_error, "unknown algorithm");
}

struct GraphRecord {
    std::uint64_t id;
    std::vector<std::uint8_t> im;
    std::vector<std::uint8_t> dpag;
};

// Compute (independence model, discovery output) fingerprints for a list of
// graphs, split across workers by stride; merge order is fixed by id.
std::vector<GraphRecord> fingerprint_all(const std::vector<std::pair<std::uint64_t, Dmg>>& graphs,
                                         Criterion crit, int workers) {
    std::vector<GraphRecord> records(graphs.size());
    workers = std::max(1, workers);
    auto work = [&](int t) {
        for (std::size_t k = t; k < graphs.size(); k += static_cast<std::size_t>(workers)) {
            const auto& [id, g] = graphs[k];
            IndependenceModel im = independence_model(g, crit, NodeSet::max_nodes);
            DiscoveryResult r = fci(graph_oracle(g, crit), g.names());
            records[k] = {id, im.encode(), r.dpag.encode()};
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return records;
}

EquivReport analyze_records(const std::vector<std::pair<std::uint64_t, Dmg>>& graphs,
                            const std::vector<GraphRecord>& records) {
    EquivReport report;
    report.graphs_checked = records.size();
    std::map<std::vector<std::uint8_t>, std::size_t> im_first;     // im -> first record index
    std::map<std::vector<std::uint8_t>, std::size_t> dpag_first;   // dpag -> first record index
    for (std::size_t k = 0; k < records.size(); ++k) {
        auto [it_im, fresh_im] = im_first.try_emplace(records[k].im, k);
        if (fresh_im) ++report.class_count;
        auto [it_dp, fresh_dp] = dpag_first.try_emplace(records[k].dpag, k);
        if (!fresh_im && records[it_im->second].dpag != records[k].dpag) {
            std::size_t o = it_im->second;
            report.counterexamples.push_back({records[o].id, records[k].id, graphs[o].second,
                                              graphs[k].second,
                                              "equal independence models, different outputs"});
        }
        if (!fresh_dp && records[it_dp->second].im != records[k].im) {
            std::size_t o = it_dp->second;
            report.counterexamples.push_back({records[o].id, records[k].id, graphs[o].second,
                                              graphs[k].second,
                                              "different independence models, equal outputs"});
        }
    }
    report.ok = report.counterexamples.empty();
    return report;
}

}  // namespace

MecPartition mec_partition(const GraphFamily& family, Criterion crit) {
    std::map<std::vector<std::uint8_t>, MecClass> classes;
    std::vector<std::vector<std::uint8_t>> order;
    enumerate_dmgs(family, [&](const Dmg& g, std::uint64_t id) {
        auto key = independence_model(g, crit, NodeSet::max_nodes).encode();
        auto it = classes.find(key);
        if (it == classes.end()) {
            DiscoveryResult r = fci(graph_oracle(g, crit), g.names());
            classes.emplace(key, MecClass{{id}, r.dpag});
            order.push_back(key);
        } else {
            it->second.graph_ids.push_back(id);
        }
    });
    MecPartition out;
    for (const auto& key : order) out.classes.push_back(classes.at(key));
    return out;
}

EquivReport verify_markov_completeness(const GraphFamily& family, Criterion crit, int workers) {
    std::vector<std::pair<std::uint64_t, Dmg>> graphs;
    enumerate_dmgs(family, [&](const Dmg& g, std::uint64_t id) { graphs.emplace_back(id, g); });
    return analyze_records(graphs, fingerprint_all(graphs, crit, workers));
}

EquivReport verify_markov_completeness_sampled(const GraphFamily& family, Criterion crit, int samples,
                                               std::uint64_t seed, int workers) {
    Rng rng(seed);
    std::vector<std::pair<std::uint64_t, Dmg>> graphs;
    for (int k = 0; k < samples; ++k)
        graphs.emplace_back(static_cast<std::uint64_t>(k), sample_family_member(family, rng));
    return analyze_records(graphs, fingerprint_all(graphs, crit, workers));
}

EquivReport verify_background_soundness(const GraphFamily& family, const BackgroundKnowledge& psi,
                                        Algorithm algo, int samples, std::uint64_t seed) {
    EquivReport report;
    Criterion crit = Criterion::sigma;
    auto check_one = [&](const Dmg& g, std::uint64_t id) {
        if (!psi.check(g)) return;
        ++report.graphs_checked;
        DiscoveryResult r = run_algorithm(algo, g, crit, family);
        if (!identify::contains(r.dpag, g))
            report.counterexamples.push_back({id, id, g, g, "output does not contain the graph"});

        // knowledge-compatibility of acyclification: existence, ancestry
        // realizability, non-ancestry preservation
        std::vector<Dmg> candidates;
        candidates.push_back(canonical_acyclification(g).graph);
        for (std::uint64_t s = 1; s <= 3; ++s)
            candidates.push_back(sample_acyclification(g, Rng::mix(seed, s)).graph);
        bool any_valid = false;
        for (const auto& h : candidates) any_valid = any_valid || psi.check(h);
        if (!any_valid)
            report.counterexamples.push_back({id, id, g, g, "no knowledge-preserving acyclification"});
        const int n = g.node_count();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (g.ancestors(j).contains(i)) {
                    Dmg w = ancestor_witness_acyclification(g, i, j).graph;
                    if (!psi.check(w) || !w.ancestors(j).contains(i))
                        report.counterexamples.push_back(
                            {id, id, g, g, "ancestry not realizable under the knowledge"});
                } else {
                    for (const auto& h : candidates)
                        if (psi.check(h) && h.ancestors(j).contains(i))
                            report.counterexamples.push_back(
                                {id, id, g, g, "acyclification invented an ancestry"});
                }
            }
    };
    if (samples <= 0) {
        enumerate_dmgs(family, check_one);
    } else {
        Rng rng(seed);
        for (int k = 0; k < samples; ++k) check_one(sample_family_member(family, rng), k);
    }
    report.class_count = 0;
    report.ok = report.counterexamples.empty();
    return report;
}

}  // namespace causaldisc
