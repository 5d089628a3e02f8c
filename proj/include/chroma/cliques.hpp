#pragma once

#include "graph.hpp"

#include <bit>
#include <optional>

namespace chroma {

// Greedy clique: grow from each vertex in degree-descending (then id) order.
// Valid lower bound for any n; only used directly where exact search is off
// the table (n > 64).
inline VertexSet greedy_clique(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    VertexSet best;
    for (int s : order) {
        VertexSet cur{s};
        for (int v : order) {
            if (v == s) continue;
            bool ok = true;
            for (int u : cur)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) cur.push_back(v);
        }
        if (cur.size() > best.size()) best = std::move(cur);
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace detail {

struct MaxCliqueSearch {
    const std::vector<std::uint64_t>& nbr;
    int best = 0;
    std::uint64_t best_set = 0;

    void run(std::uint64_t cand, std::uint64_t cur, int size) {
        if (cand == 0) {
            if (size > best) {
                best = size;
                best_set = cur;
            }
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t{1} << v;
        run(cand & nbr[static_cast<std::size_t>(v)], cur | bit, size + 1);
        run(cand ^ bit, cur, size);
    }
};

}  // namespace detail

// Exact maximum clique; requires n <= 64. First maximum found under the
// fixed take-lowest-vertex-first branching, so the result is deterministic.
inline VertexSet max_clique(const Graph& g) {
    if (g.n > 64) throw std::invalid_argument("exact clique search requires at most 64 vertices");
    if (g.n == 0) return {};
    auto masks = adjacency_masks(g);
    detail::MaxCliqueSearch search{masks};
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    search.run(all, 0, 0);
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (search.best_set >> v & 1) out.push_back(v);
    return out;
}

// Exact for n <= 64, greedy lower bound beyond that.
inline int max_clique_size(const Graph& g) {
    if (g.n <= 64) return static_cast<int>(max_clique(g).size());
    return static_cast<int>(greedy_clique(g).size());
}

namespace detail {

inline bool find_clique_from(const std::vector<std::uint64_t>& nbr, int n, int t, int start,
                             std::uint64_t cand, VertexSet& chosen) {
    if (static_cast<int>(chosen.size()) == t) return true;
    for (int v = start; v < n; ++v) {
        if (!(cand >> v & 1)) continue;
        if (n - v < t - static_cast<int>(chosen.size())) return false;
        chosen.push_back(v);
        if (find_clique_from(nbr, n, t, v + 1, cand & nbr[static_cast<std::size_t>(v)], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

// Lexicographically least t-clique, if any; requires n <= 64.
inline std::optional<VertexSet> find_clique(const Graph& g, int t) {
    if (t <= 0) return VertexSet{};
    if (t > g.n) return std::nullopt;
    if (g.n > 64) throw std::invalid_argument("exact clique search requires at most 64 vertices");
    auto masks = adjacency_masks(g);
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    VertexSet chosen;
    if (detail::find_clique_from(masks, g.n, t, 0, all, chosen)) return chosen;
    return std::nullopt;
}

}  // namespace chroma
