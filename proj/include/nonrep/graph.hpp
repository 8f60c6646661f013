#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nonrep {

/// Simple undirected graph over dense vertex ids 0..n-1.
/// No loops, no parallel edges; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    bool has_vertex(int v) const {
        return v >= 0 && v < num_vertices();
    }

    bool has_edge(int u, int v) const {
        if (!has_vertex(u) || !has_vertex(v)) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Inserts the edge uv. Loops and duplicates are errors.
    void add_edge(int u, int v) {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
        adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
        ++m_;
    }

    const std::vector<int>& neighbours(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
        return d;
    }

    /// Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < num_vertices(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// (c,d) degree profile: c vertices have degree strictly greater than d.
struct DegreeProfile {
    int c = 0;
    int d = 0;
    int max_degree = 0;
};

inline DegreeProfile degree_profile(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("negative degree threshold");
    DegreeProfile p;
    p.d = d;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int deg = g.degree(v);
        p.max_degree = std::max(p.max_degree, deg);
        if (deg > d) ++p.c;
    }
    return p;
}

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Parses the "p <n> <m>" / "e <u> <v>" edge-list format (1-indexed).
/// Lines starting with "c" are comments.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Graph> g;
    int declared_m = 0, seen_m = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (g) throw ParseError(lineno, "duplicate header");
            int n, m;
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected 'p <n> <m>'");
            g.emplace(n);
            declared_m = m;
        } else if (tag == "e") {
            if (!g) throw ParseError(lineno, "edge before header");
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > g->num_vertices() || v < 1 || v > g->num_vertices())
                throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "loop edge");
            if (g->has_edge(u - 1, v - 1)) throw ParseError(lineno, "duplicate edge");
            g->add_edge(u - 1, v - 1);
            ++seen_m;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!g) throw ParseError(lineno, "missing header");
    if (seen_m != declared_m)
        throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                     " edges, found " + std::to_string(seen_m));
    return *g;
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

/// Result of an identification: the simplified graph plus the map from old
/// vertex ids to new dense ids (-1 for vertices that vanished into the merge
/// target's id slot is never needed; every old vertex maps somewhere).
struct IdentifyResult {
    Graph graph;
    std::vector<int> old_to_new;  // size = old n
};

/// Collapses the vertex set S to a single vertex. The merged vertex keeps the
/// smallest id in S unless an explicit label inside S is given. Loops and
/// parallel edges arising from the merge are dropped.
inline IdentifyResult identify_vertices_mapped(const Graph& g, const std::vector<int>& s,
                                               std::optional<int> label = std::nullopt) {
    if (s.empty()) throw std::invalid_argument("identify_vertices: empty set");
    std::set<int> ss(s.begin(), s.end());
    for (int v : ss)
        if (!g.has_vertex(v)) throw std::out_of_range("identify_vertices: unknown vertex");
    int rep = label.value_or(*ss.begin());
    if (!ss.count(rep)) throw std::invalid_argument("identify_vertices: label not in set");

    std::vector<int> old_to_new(g.num_vertices(), -1);
    int next = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (ss.count(v) && v != rep) continue;
        old_to_new[v] = next++;
    }
    for (int v : ss) old_to_new[v] = old_to_new[rep];

    Graph out(next);
    for (auto [u, v] : g.edge_list()) {
        int a = old_to_new[u], b = old_to_new[v];
        if (a == b) continue;  // loop from inside S
        if (!out.has_edge(a, b)) out.add_edge(a, b);
    }
    return {std::move(out), std::move(old_to_new)};
}

inline Graph identify_vertices(const Graph& g, const std::vector<int>& s,
                               std::optional<int> label = std::nullopt) {
    return identify_vertices_mapped(g, s, label).graph;
}

/// Induced subgraph on the given vertices, relabelled densely in the order
/// given. `vertices` must be duplicate-free.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // local id -> original id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        int v = vertices[i];
        if (!g.has_vertex(v)) throw std::out_of_range("induced_subgraph: unknown vertex");
        if (local[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        local[v] = i;
    }
    InducedSubgraph out{Graph(static_cast<int>(vertices.size())), vertices};
    for (auto [u, v] : g.edge_list())
        if (local[u] != -1 && local[v] != -1) out.graph.add_edge(local[u], local[v]);
    return out;
}

}  // namespace nonrep
