#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

// Vertex ids are dense 0..n-1. A VertexSet is sorted and duplicate-free.
using VertexSet = std::vector<int>;

inline bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Finite simple undirected graph. Neighbor lists are sorted, symmetric and
// free of self-loops and duplicates; constructors below establish this.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(std::max(vertices, 0))) {
        if (vertices < 0) throw std::invalid_argument("vertex count must be non-negative");
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj) twice += static_cast<long long>(row.size());
        return twice / 2;
    }

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u) + " is not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " vertices");
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : g.adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
}

// Copy of g with one edge deleted; the edge must exist.
inline Graph without_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    Graph h = g;
    auto& ru = h.adj[static_cast<std::size_t>(u)];
    auto& rv = h.adj[static_cast<std::size_t>(v)];
    ru.erase(std::lower_bound(ru.begin(), ru.end(), v));
    rv.erase(std::lower_bound(rv.begin(), rv.end(), u));
    return h;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;  // host id -> sub id, -1 when not a member
    VertexSet to_host;        // sub id -> host id (the sorted member list)
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& members) {
    VertexSet s = set_normalized(members);
    if (!s.empty() && (s.front() < 0 || s.back() >= g.n))
        throw std::invalid_argument("induced subgraph member out of range");
    InducedSubgraph out;
    out.to_host = s;
    out.to_sub.assign(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) out.to_sub[static_cast<std::size_t>(s[i])] = i;
    out.graph = Graph(static_cast<int>(s.size()));
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        for (int w : g.adj[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])])
            if (int j = out.to_sub[static_cast<std::size_t>(w)]; j >= 0)
                out.graph.adj[static_cast<std::size_t>(i)].push_back(j);
    return out;  // rows inherit sorted order from the host lists
}

// Components ordered by smallest member id; members sorted.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(s)] = id;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.adj[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

// Per-vertex neighbor bitmasks; only valid for hosts of at most 64 vertices.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.n > 64) throw std::invalid_argument("adjacency masks require at most 64 vertices");
    std::vector<std::uint64_t> m(static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)]) m[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return m;
}

}  // namespace chroma
