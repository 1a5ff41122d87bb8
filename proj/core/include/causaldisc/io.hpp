#pragma once

#include <string>
#include <vector>

#include "causaldisc/dmg.hpp"
#include "causaldisc/dpag.hpp"
#include "causaldisc/equivalence.hpp"
#include "causaldisc/identify.hpp"

namespace causaldisc::io {

/// Graph file: {"version":1, "nodes":[{"name":..}], "edges":[{"from","to","type"}],
/// "context_nodes":[..]?}. Edge type is "directed" or "bidirected".
struct GraphDocument {
    Dmg graph;
    std::vector<std::string> context_nodes;

    NodeSet context_set() const;
};

GraphDocument parse_graph(const std::string& text);
std::string serialize_graph(const Dmg& g, const std::vector<std::string>& context_nodes = {});

/// Plain edge-list import: one "a -> b" or "a <-> b" per line; '#' comments.
GraphDocument parse_edge_list(const std::string& text);

/// DPAG file: {"version":1, "nodes":[..], "edges":[{"a","b","mark_a","mark_b"}]}.
Dpag parse_dpag(const std::string& text);
std::string serialize_dpag(const Dpag& p);

/// DOT rendering with mark glyphs: tail=none, arrow=normal, circle=odot.
std::string export_dot(const Dpag& p);

std::string claims_to_json(const std::vector<identify::FeatureClaim>& claims,
                           const std::vector<std::string>& names);

std::string report_to_json(const EquivReport& report);

}  // namespace causaldisc::io
