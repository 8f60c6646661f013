#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonrep/containment.hpp"
#include "nonrep/decomposition.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/strategies.hpp"
#include "nonrep/transform.hpp"
#include "nonrep/verifier.hpp"

namespace nonrep {

using json = nlohmann::json;

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

/// Accepts both the text edge-list format and the JSON form.
inline Graph parse_graph_any(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        if (c == '{') return graph_from_json(json::parse(text));
        break;
    }
    return parse_graph(text);
}

inline json colouring_to_json(const Colouring& col, const std::string& mode = "exact",
                              std::optional<int> t_max = std::nullopt,
                              const std::optional<RepetitionWitness>& witness = std::nullopt) {
    json j = {{"palette_size", col.palette_size},
              {"colours", col.colours},
              {"mode", mode},
              {"t_max", t_max ? json(*t_max) : json(nullptr)},
              {"witness", witness ? json(witness->path) : json(nullptr)}};
    return j;
}

inline Colouring colouring_from_json(const json& j) {
    Colouring col;
    col.palette_size = j.at("palette_size").get<int>();
    col.colours = j.at("colours").get<std::vector<int>>();
    return col;
}

inline json bag_family_to_json(const BagFamily& f, const std::string& kind) {
    json nodes = json::array();
    for (int x = 0; x < f.tree.num_nodes; ++x) nodes.push_back(x);
    json edges = json::array();
    for (auto [x, y] : f.tree.edges) edges.push_back({x, y});
    json bags = json::object();
    for (int x = 0; x < f.tree.num_nodes; ++x) bags[std::to_string(x)] = f.bags[x];
    return {{"kind", kind},
            {"tree", {{"nodes", nodes},
                      {"edges", edges},
                      {"root", f.tree.root ? json(*f.tree.root) : json(nullptr)}}},
            {"bags", bags}};
}

struct DecompositionFile {
    std::string kind;  // "tree-decomposition" | "t-partition"
    BagFamily family;
};

inline DecompositionFile bag_family_from_json(const json& j) {
    DecompositionFile out;
    out.kind = j.at("kind").get<std::string>();
    const auto& tree = j.at("tree");

    // external node ids (ints or strings) map to dense indices by position
    std::map<std::string, int> index;
    auto id_key = [](const json& v) {
        return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
    };
    for (const auto& node : tree.at("nodes")) {
        std::string key = id_key(node);
        if (index.count(key)) throw std::invalid_argument("duplicate tree node id " + key);
        int next = static_cast<int>(index.size());
        index[key] = next;
    }
    out.family.tree.num_nodes = static_cast<int>(index.size());
    for (const auto& e : tree.at("edges"))
        out.family.tree.edges.emplace_back(index.at(id_key(e.at(0))), index.at(id_key(e.at(1))));
    if (tree.contains("root") && !tree.at("root").is_null())
        out.family.tree.root = index.at(id_key(tree.at("root")));

    out.family.bags.assign(out.family.tree.num_nodes, {});
    for (const auto& [key, bag] : j.at("bags").items()) {
        auto it = index.find(key);
        if (it == index.end()) throw std::invalid_argument("bag for unknown node " + key);
        auto vs = bag.get<std::vector<int>>();
        std::sort(vs.begin(), vs.end());
        out.family.bags[it->second] = std::move(vs);
    }
    return out;
}

inline json violations_to_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"clause", v.clause}, {"detail", v.detail}});
    return out;
}

inline json transform_report_to_json(const TransformReport& r) {
    json profiles = json::object();
    for (int x = 0; x < static_cast<int>(r.torso_profiles.size()); ++x)
        profiles[std::to_string(x)] = {{"c", r.torso_profiles[x].c},
                                       {"max_degree", r.torso_profiles[x].max_degree}};
    return {{"input_adhesion", r.input_adhesion},
            {"output_adhesion", r.output_adhesion},
            {"hypothesis_met", r.hypothesis_met},
            {"per_edge_ok", r.per_edge_ok},
            {"star_ok", r.star_ok},
            {"torso_bound_ok", r.torso_bound_ok},
            {"t", r.t ? json(*r.t) : json(nullptr)},
            {"torso_profiles", profiles}};
}

inline json containment_witness_to_json(const ContainmentWitness& w) {
    json branch = json::object();
    for (int hv = 0; hv < static_cast<int>(w.branch_map.size()); ++hv)
        branch[std::to_string(hv)] = w.branch_map[hv];
    json paths = json::object();
    for (const auto& [he, path] : w.paths)
        paths[std::to_string(he.first) + "-" + std::to_string(he.second)] = path;
    return {{"mode", to_string(w.mode)}, {"branch_map", branch}, {"paths", paths}};
}

inline json torso_to_json(const Torso& t) {
    return {{"graph", graph_to_json(t.graph)}, {"vertices", t.vertices}};
}

}  // namespace nonrep
