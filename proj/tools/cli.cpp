#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "causaldisc/acyclify.hpp"
#include "causaldisc/discovery.hpp"
#include "causaldisc/equivalence.hpp"
#include "causaldisc/identify.hpp"
#include "causaldisc/io.hpp"
#include "causaldisc/oracle.hpp"

namespace causaldisc::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconsistent = 3;

// Discovery over a graph-backed oracle walks conditioning sets of the current
// adjacencies; beyond this many nodes that needs an explicit opt-in.
constexpr int kOracleGuard = 25;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::validation_error, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::validation_error, "cannot write '" + path + "'");
    out << content;
}

io::GraphDocument load_graph(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() > 4 && path.substr(path.size() - 4) == ".txt") return io::parse_edge_list(text);
    return io::parse_graph(text);
}

Criterion parse_criterion(const std::string& s) {
    if (s == "d") return Criterion::d;
    if (s == "sigma") return Criterion::sigma;
    throw Error(ErrorCode::validation_error, "criterion must be 'd' or 'sigma'");
}

unsigned parse_jci_subset(const std::string& s) {
    unsigned subset = 0;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        if (item == "1")
            subset |= 1u;
        else if (item == "2")
            subset |= 2u;
        else if (item == "3")
            subset |= 4u;
        else
            throw Error(ErrorCode::invalid_jci_subset, "JCI assumptions are named 1, 2 and 3");
    }
    return subset;
}

NodeSet resolve_contexts(const io::GraphDocument& doc, const std::string& flag) {
    if (flag.empty()) return doc.context_set();
    NodeSet out;
    std::istringstream in(flag);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        int idx = doc.graph.index_of(name);
        if (idx < 0) throw Error(ErrorCode::validation_error, "unknown context node '" + name + "'");
        out.insert(idx);
    }
    return out;
}

NodeSet parse_given(const Dmg& g, const std::string& s) {
    NodeSet out;
    std::istringstream in(s);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        int idx = g.index_of(name);
        if (idx < 0) throw Error(ErrorCode::validation_error, "unknown node '" + name + "'");
        out.insert(idx);
    }
    return out;
}

void guard_universe(const Dmg& g, bool force) {
    if (g.node_count() > kOracleGuard && !force)
        throw Error(ErrorCode::validation_error,
                    "graph has more than " + std::to_string(kOracleGuard) +
                        " nodes; discovery over an exact oracle may be very slow, pass --force "
                        "to proceed");
}

void emit_discovery(const DiscoveryResult& result, const std::string& out_path,
                    const std::string& dot_path) {
    write_output(out_path, io::serialize_dpag(result.dpag));
    if (!dot_path.empty()) write_output(dot_path, io::export_dot(result.dpag));
}

struct DiscoverOptions {
    std::string in, out, dot, criterion = "sigma";
    bool force = false;
};

void add_discover_flags(CLI::App* cmd, DiscoverOptions& opt) {
    cmd->add_option("--in", opt.in, "input graph document (JSON, or .txt edge list)")->required();
    cmd->add_option("--out", opt.out, "output DPAG document path ('-' for stdout)");
    cmd->add_option("--dot", opt.dot, "also write a DOT rendering here");
    cmd->add_option("--criterion", opt.criterion, "separation criterion: sigma (default) or d");
    cmd->add_flag("--force", opt.force, "run even on very large graphs");
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"constraint-based causal discovery on directed mixed graphs, cycles allowed"};
    app.require_subcommand(1);

    DiscoverOptions fci_opt;
    auto* fci_cmd = app.add_subcommand("fci", "run FCI against a graph-backed oracle");
    add_discover_flags(fci_cmd, fci_opt);

    DiscoverOptions pc_opt;
    auto* pc_cmd = app.add_subcommand("pc", "run PC with Meek rules (assumes causal sufficiency)");
    add_discover_flags(pc_cmd, pc_opt);

    DiscoverOptions jci_opt;
    std::string jci_subset_flag = "1,2,3";
    std::string jci_context_flag;
    auto* jci_cmd = app.add_subcommand("jci", "run FCI with JCI background knowledge");
    add_discover_flags(jci_cmd, jci_opt);
    jci_cmd->add_option("--jci", jci_subset_flag, "assumption subset, e.g. 1,2,3");
    jci_cmd->add_option("--context", jci_context_flag, "comma list of context node names");

    std::string id_in, id_dpag, id_out, id_criterion = "sigma";
    bool id_force = false;
    auto* id_cmd = app.add_subcommand("identify", "read identifiable causal features off a DPAG");
    id_cmd->add_option("--in", id_in, "input graph document")->required();
    id_cmd->add_option("--dpag", id_dpag, "DPAG document (recomputed via fci when omitted)");
    id_cmd->add_option("--out", id_out, "output JSON path ('-' for stdout)");
    id_cmd->add_option("--criterion", id_criterion, "separation criterion for recomputation");
    id_cmd->add_flag("--force", id_force, "run even on very large graphs");

    int eq_n = 3;
    int eq_samples = 0;
    int eq_workers = 1;
    int eq_context_count = 1;
    std::uint64_t eq_seed = 1;
    std::string eq_criterion = "sigma", eq_out, eq_psi = "none", eq_family = "full";
    std::string eq_algorithm = "fci";
    auto* eq_cmd = app.add_subcommand("equiv", "equivalence-class and soundness verification sweeps");
    eq_cmd->add_option("--n", eq_n, "node count");
    eq_cmd->add_option("--samples", eq_samples, "sample count (0 = exhaustive enumeration)");
    eq_cmd->add_option("--seed", eq_seed, "sampling seed");
    eq_cmd->add_option("--criterion", eq_criterion, "separation criterion");
    eq_cmd->add_option("--out", eq_out, "report path ('-' for stdout)");
    eq_cmd->add_option("--psi", eq_psi,
                       "background knowledge: none, acyclicity, causal-sufficiency, jci");
    eq_cmd->add_option("--family", eq_family, "graph family: full or dg (no bidirected edges)");
    eq_cmd->add_option("--algorithm", eq_algorithm, "algorithm for soundness sweeps: fci, pc, jci");
    eq_cmd->add_option("--context", eq_context_count, "context count for jci families");
    eq_cmd->add_option("--workers", eq_workers, "worker threads for the completeness sweep");

    std::string acy_in, acy_out;
    std::int64_t acy_seed = -1;
    double acy_density = 0.0;
    auto* acy_cmd = app.add_subcommand("acyclify", "emit an acyclification of the input graph");
    acy_cmd->add_option("--in", acy_in, "input graph document")->required();
    acy_cmd->add_option("--out", acy_out, "output graph path ('-' for stdout)");
    acy_cmd->add_option("--seed", acy_seed, "sample with this seed (default: canonical)");
    acy_cmd->add_option("--bidirected-density", acy_density,
                        "extra intra-component bidirected edge density for sampled output");

    std::string or_in, or_i, or_j, or_given, or_criterion = "sigma";
    auto* or_cmd = app.add_subcommand("oracle", "answer a single separation query");
    or_cmd->add_option("--in", or_in, "input graph document")->required();
    or_cmd->add_option("--i", or_i, "first node name")->required();
    or_cmd->add_option("--j", or_j, "second node name")->required();
    or_cmd->add_option("--given", or_given, "comma list of conditioning node names");
    or_cmd->add_option("--criterion", or_criterion, "separation criterion");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (fci_cmd->parsed()) {
        io::GraphDocument doc = load_graph(fci_opt.in);
        guard_universe(doc.graph, fci_opt.force);
        GraphOracle oracle = graph_oracle(doc.graph, parse_criterion(fci_opt.criterion));
        emit_discovery(fci(oracle, doc.graph.names()), fci_opt.out, fci_opt.dot);
        return kExitOk;
    }
    if (pc_cmd->parsed()) {
        io::GraphDocument doc = load_graph(pc_opt.in);
        guard_universe(doc.graph, pc_opt.force);
        GraphOracle oracle = graph_oracle(doc.graph, parse_criterion(pc_opt.criterion));
        emit_discovery(pc_meek(oracle, doc.graph.names()), pc_opt.out, pc_opt.dot);
        return kExitOk;
    }
    if (jci_cmd->parsed()) {
        io::GraphDocument doc = load_graph(jci_opt.in);
        guard_universe(doc.graph, jci_opt.force);
        NodeSet contexts = resolve_contexts(doc, jci_context_flag);
        GraphOracle oracle = graph_oracle(doc.graph, parse_criterion(jci_opt.criterion));
        emit_discovery(fci_jci(oracle, doc.graph.names(), contexts, parse_jci_subset(jci_subset_flag)),
                       jci_opt.out, jci_opt.dot);
        return kExitOk;
    }
    if (id_cmd->parsed()) {
        io::GraphDocument doc = load_graph(id_in);
        NodeSet contexts = doc.context_set();
        DiscoveryResult result = [&] {
            if (!id_dpag.empty()) return DiscoveryResult{io::parse_dpag(read_file(id_dpag)), {}, {}};
            guard_universe(doc.graph, id_force);
            GraphOracle oracle = graph_oracle(doc.graph, parse_criterion(id_criterion));
            // context metadata switches to the JCI variant; the intervention
            // target criteria below assume its background knowledge
            if (!contexts.empty()) return fci_jci(oracle, doc.graph.names(), contexts, 7u);
            return fci(oracle, doc.graph.names());
        }();
        auto claims = identify::all_claims(result);
        if (!contexts.empty()) {
            NodeSet systems = NodeSet::all(doc.graph.node_count()) - contexts;
            for (auto& claim : identify::jci_direct_targets(result, contexts, systems))
                claims.push_back(claim);
        }
        write_output(id_out, io::claims_to_json(claims, doc.graph.names()));
        return kExitOk;
    }
    if (eq_cmd->parsed()) {
        GraphFamily family;
        family.n = eq_n;
        family.allow_bidirected = (eq_family != "dg");
        if (eq_psi == "causal-sufficiency") family.allow_bidirected = false;
        if (eq_psi == "jci") family.jci_context_count = eq_context_count;
        Criterion crit = parse_criterion(eq_criterion);
        EquivReport report;
        if (eq_psi == "none") {
            report = eq_samples > 0
                         ? verify_markov_completeness_sampled(family, crit, eq_samples, eq_seed,
                                                              eq_workers)
                         : verify_markov_completeness(family, crit, eq_workers);
        } else {
            BackgroundKnowledge psi = [&] {
                if (eq_psi == "acyclicity") return BackgroundKnowledge::acyclicity();
                if (eq_psi == "causal-sufficiency") return BackgroundKnowledge::causal_sufficiency();
                if (eq_psi == "jci")
                    return BackgroundKnowledge::jci(7u, family.context_nodes());
                throw Error(ErrorCode::validation_error, "unknown --psi value '" + eq_psi + "'");
            }();
            Algorithm algo = [&] {
                if (eq_algorithm == "fci") return Algorithm::fci;
                if (eq_algorithm == "pc") return Algorithm::pc_meek;
                if (eq_algorithm == "jci") return Algorithm::fci_jci;
                throw Error(ErrorCode::validation_error, "unknown --algorithm '" + eq_algorithm + "'");
            }();
            report = verify_background_soundness(family, psi, algo, eq_samples, eq_seed);
        }
        write_output(eq_out.empty() ? "-" : eq_out, io::report_to_json(report));
        return report.ok ? kExitOk : kExitValidation;
    }
    if (acy_cmd->parsed()) {
        io::GraphDocument doc = load_graph(acy_in);
        Acyclification acy =
            acy_seed < 0 ? canonical_acyclification(doc.graph)
                         : sample_acyclification(doc.graph, static_cast<std::uint64_t>(acy_seed),
                                                 acy_density);
        write_output(acy_out, io::serialize_graph(acy.graph, doc.context_nodes));
        return kExitOk;
    }
    if (or_cmd->parsed()) {
        io::GraphDocument doc = load_graph(or_in);
        int i = doc.graph.index_of(or_i);
        int j = doc.graph.index_of(or_j);
        if (i < 0 || j < 0) throw Error(ErrorCode::validation_error, "unknown node name");
        bool sep = separated(doc.graph, NodeSet::single(i), NodeSet::single(j),
                             parse_given(doc.graph, or_given), parse_criterion(or_criterion));
        std::cout << (sep ? "separated" : "connected") << "\n";
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    try {
        return run(args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::oracle_inconsistent ? kExitInconsistent : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return cli_main(args);
}

}  // namespace causaldisc::cli
