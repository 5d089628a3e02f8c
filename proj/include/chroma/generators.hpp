#pragma once

#include "graph.hpp"
#include "rng.hpp"

namespace chroma {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.adj[static_cast<std::size_t>(u)].push_back(v);
    return g;
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return from_edge_list(n, es);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, es);
}

// Disjoint copies of a and b (b shifted by |V(a)|) plus every cross edge.
inline Graph join(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (int u = 0; u < a.n; ++u) g.adj[static_cast<std::size_t>(u)] = a.adj[static_cast<std::size_t>(u)];
    for (int u = 0; u < b.n; ++u)
        for (int v : b.adj[static_cast<std::size_t>(u)]) g.adj[static_cast<std::size_t>(a.n + u)].push_back(a.n + v);
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v) {
            g.adj[static_cast<std::size_t>(u)].push_back(a.n + v);
            g.adj[static_cast<std::size_t>(a.n + v)].push_back(u);
        }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

// Mycielski construction: vertices 0..n-1 keep g's edges, shadow n+i sees
// N(i), apex 2n sees every shadow. Raises the chromatic number by one while
// keeping the graph triangle-free if it was.
inline Graph mycielski(const Graph& g) {
    int n = g.n;
    std::vector<std::pair<int, int>> es = g.edges();
    for (int i = 0; i < n; ++i)
        for (int w : g.adj[static_cast<std::size_t>(i)]) es.emplace_back(n + i, w);
    for (int i = 0; i < n; ++i) es.emplace_back(2 * n, n + i);
    return from_edge_list(2 * n + 1, es);
}

// k-fold Mycielski iterate of K2; k=0 is K2, k=1 is C5, k=2 is an 11-vertex
// 4-chromatic triangle-free graph.
inline Graph mycielski_iterate(int k) {
    if (k < 0) throw std::invalid_argument("mycielski iterate count must be non-negative");
    Graph g = from_edge_list(2, {{0, 1}});
    for (int i = 0; i < k; ++i) g = mycielski(g);
    return g;
}

inline Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer cycle
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        es.emplace_back(i, 5 + i);                // spokes
    }
    return from_edge_list(10, es);
}

// K_n with every edge subdivided once: n + n(n-1)/2 vertices, bipartite,
// contains a topological K_n. A corpus member with a large clique minor and
// chromatic number 2.
inline Graph subdivided_complete(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::pair<int, int>> es;
    int mid = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            es.emplace_back(u, mid);
            es.emplace_back(mid, v);
            ++mid;
        }
    return from_edge_list(mid, es);
}

// Each unordered pair (u,v), u<v, is visited in lexicographic order and kept
// with probability p using one splitmix64 double per pair. Fixed (n, p, seed)
// yields a bit-identical graph on every platform and run.
inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be within [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) es.emplace_back(u, v);
    return from_edge_list(n, es);
}

}  // namespace chroma
