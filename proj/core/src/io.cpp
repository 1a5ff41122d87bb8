#include "causaldisc/io.hpp"

#include <sstream>

#include <json.hpp>

namespace causaldisc::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

int require_node(const Dmg& g, const std::string& name, const char* where) {
    int idx = g.index_of(name);
    if (idx < 0)
        throw Error(ErrorCode::validation_error,
                    std::string(where) + " references unknown node '" + name + "'");
    return idx;
}

std::vector<std::string> parse_node_names(const json& doc) {
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw Error(ErrorCode::parse_error, "missing 'nodes' array");
    std::vector<std::string> names;
    for (const auto& nd : doc["nodes"]) {
        if (nd.is_string())
            names.push_back(nd.get<std::string>());
        else if (nd.is_object() && nd.contains("name"))
            names.push_back(nd["name"].get<std::string>());
        else
            throw Error(ErrorCode::parse_error, "node entries must be names or {\"name\": ...}");
    }
    return names;
}

Mark parse_mark(const std::string& s) {
    if (s == "tail") return Mark::tail;
    if (s == "arrow") return Mark::arrow;
    if (s == "circle") return Mark::circle;
    throw Error(ErrorCode::parse_error, "unknown mark '" + s + "'");
}

const char* dot_glyph(Mark m) {
    switch (m) {
        case Mark::tail: return "none";
        case Mark::arrow: return "normal";
        case Mark::circle: return "odot";
    }
    return "none";
}

}  // namespace

NodeSet GraphDocument::context_set() const {
    NodeSet s;
    for (const auto& name : context_nodes) s.insert(require_node(graph, name, "context_nodes"));
    return s;
}

GraphDocument parse_graph(const std::string& text) {
    json doc = parse_json(text);
    if (doc.contains("version") && doc["version"].get<int>() != 1)
        throw Error(ErrorCode::parse_error, "unsupported graph format version");
    std::vector<std::string> names = parse_node_names(doc);

    std::vector<std::pair<std::string, std::string>> dir_names, bidir_names;
    if (doc.contains("edges")) {
        for (const auto& ed : doc["edges"]) {
            if (!ed.contains("from") || !ed.contains("to") || !ed.contains("type"))
                throw Error(ErrorCode::parse_error, "edge entries need 'from', 'to' and 'type'");
            std::string type = ed["type"].get<std::string>();
            auto pair = std::make_pair(ed["from"].get<std::string>(), ed["to"].get<std::string>());
            if (type == "directed")
                dir_names.push_back(pair);
            else if (type == "bidirected")
                bidir_names.push_back(pair);
            else
                throw Error(ErrorCode::parse_error, "edge type must be 'directed' or 'bidirected'");
        }
    }

    // Resolve names against a node-only graph first so lookup errors carry names.
    Dmg lookup(names, {}, {});
    std::vector<std::pair<int, int>> dir, bidir;
    for (const auto& [a, b] : dir_names)
        dir.emplace_back(require_node(lookup, a, "edge"), require_node(lookup, b, "edge"));
    for (const auto& [a, b] : bidir_names)
        bidir.emplace_back(require_node(lookup, a, "edge"), require_node(lookup, b, "edge"));

    GraphDocument out{Dmg(names, dir, bidir), {}};
    if (doc.contains("context_nodes"))
        for (const auto& c : doc["context_nodes"]) {
            std::string name = c.get<std::string>();
            require_node(out.graph, name, "context_nodes");
            out.context_nodes.push_back(name);
        }
    return out;
}

std::string serialize_graph(const Dmg& g, const std::vector<std::string>& context_nodes) {
    json doc;
    doc["version"] = 1;
    doc["nodes"] = json::array();
    for (const auto& name : g.names()) doc["nodes"].push_back({{"name", name}});
    doc["edges"] = json::array();
    for (auto [i, j] : g.directed_edges())
        doc["edges"].push_back({{"from", g.name(i)}, {"to", g.name(j)}, {"type", "directed"}});
    for (auto [i, j] : g.bidirected_edges())
        doc["edges"].push_back({{"from", g.name(i)}, {"to", g.name(j)}, {"type", "bidirected"}});
    if (!context_nodes.empty()) doc["context_nodes"] = context_nodes;
    return doc.dump(2) + "\n";
}

GraphDocument parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> dir, bidir;
    auto intern = [&](const std::string& name) {
        for (const auto& n : names)
            if (n == name) return;
        names.push_back(name);
    };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, op, b;
        if (!(ls >> a)) continue;
        if (!(ls >> op >> b))
            throw Error(ErrorCode::parse_error, "bad edge line '" + line + "'");
        intern(a);
        intern(b);
        if (op == "->")
            dir.emplace_back(a, b);
        else if (op == "<->")
            bidir.emplace_back(a, b);
        else if (op == "<-")
            dir.emplace_back(b, a);
        else
            throw Error(ErrorCode::parse_error, "unknown edge operator '" + op + "'");
    }
    Dmg lookup(names, {}, {});
    std::vector<std::pair<int, int>> d, bi;
    for (const auto& [a, b] : dir)
        d.emplace_back(require_node(lookup, a, "edge"), require_node(lookup, b, "edge"));
    for (const auto& [a, b] : bidir)
        bi.emplace_back(require_node(lookup, a, "edge"), require_node(lookup, b, "edge"));
    return {Dmg(names, d, bi), {}};
}

Dpag parse_dpag(const std::string& text) {
    json doc = parse_json(text);
    if (doc.contains("version") && doc["version"].get<int>() != 1)
        throw Error(ErrorCode::parse_error, "unsupported DPAG format version");
    std::vector<std::string> names = parse_node_names(doc);
    Dmg lookup(names, {}, {});
    MarkMatrix m(static_cast<int>(names.size()));
    if (doc.contains("edges")) {
        for (const auto& ed : doc["edges"]) {
            int a = require_node(lookup, ed["a"].get<std::string>(), "edge");
            int b = require_node(lookup, ed["b"].get<std::string>(), "edge");
            if (a == b) throw Error(ErrorCode::validation_error, "self-loop in DPAG document");
            if (m.adjacent(a, b))
                throw Error(ErrorCode::validation_error, "duplicate edge in DPAG document");
            m.set_edge(a, b, parse_mark(ed["mark_a"].get<std::string>()),
                       parse_mark(ed["mark_b"].get<std::string>()));
        }
    }
    return Dpag(names, std::move(m));
}

std::string serialize_dpag(const Dpag& p) {
    json doc;
    doc["version"] = 1;
    doc["nodes"] = json::array();
    for (const auto& name : p.names()) doc["nodes"].push_back({{"name", name}});
    doc["edges"] = json::array();
    for (auto [i, j, at_i, at_j] : p.edges())
        doc["edges"].push_back({{"a", p.name(i)},
                                {"b", p.name(j)},
                                {"mark_a", mark_name(at_i)},
                                {"mark_b", mark_name(at_j)}});
    return doc.dump(2) + "\n";
}

std::string export_dot(const Dpag& p) {
    std::ostringstream out;
    out << "digraph dpag {\n";
    out << "  edge [dir=both];\n";
    for (const auto& name : p.names()) out << "  \"" << name << "\";\n";
    for (auto [i, j, at_i, at_j] : p.edges())
        out << "  \"" << p.name(i) << "\" -> \"" << p.name(j) << "\" [arrowtail=" << dot_glyph(at_i)
            << ", arrowhead=" << dot_glyph(at_j) << "];\n";
    out << "}\n";
    return out.str();
}

std::string claims_to_json(const std::vector<identify::FeatureClaim>& claims,
                           const std::vector<std::string>& names) {
    json arr = json::array();
    for (const auto& c : claims) {
        json item;
        item["kind"] = identify::claim_kind_name(c.kind);
        item["i"] = names.at(c.i);
        item["j"] = names.at(c.j);
        item["rule"] = c.rule;
        if (!c.witness_paths.empty()) {
            json paths = json::array();
            for (const auto& path : c.witness_paths) {
                json nodes = json::array();
                for (int v : path) nodes.push_back(names.at(v));
                paths.push_back(nodes);
            }
            item["witness"] = paths;
        }
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

std::string report_to_json(const EquivReport& report) {
    json doc;
    doc["ok"] = report.ok;
    doc["graphs_checked"] = report.graphs_checked;
    doc["class_count"] = report.class_count;
    doc["counterexamples"] = json::array();
    for (const auto& ce : report.counterexamples) {
        json item;
        item["id1"] = ce.id1;
        item["id2"] = ce.id2;
        item["reason"] = ce.reason;
        item["graph1"] = json::parse(serialize_graph(ce.graph1));
        item["graph2"] = json::parse(serialize_graph(ce.graph2));
        doc["counterexamples"].push_back(item);
    }
    return doc.dump(2) + "\n";
}

}  // namespace causaldisc::io
