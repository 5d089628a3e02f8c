#pragma once

#include "cliques.hpp"
#include "graph.hpp"

#include <optional>

namespace chroma {

struct Coloring {
    int k = 0;               // palette size the coloring was produced against
    std::vector<int> color;  // one entry per vertex
};

inline bool verify_coloring(const Graph& g, const Coloring& c, int k) {
    if (static_cast<int>(c.color.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (c.color[static_cast<std::size_t>(v)] < 0 || c.color[static_cast<std::size_t>(v)] >= k) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (u < v && c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)]) return false;
    return true;
}

// Stable palette: colors renumbered in order of first appearance by vertex id,
// so equal colorings serialize identically across runs.
inline Coloring canonicalize_colors(Coloring c) {
    std::vector<int> remap(static_cast<std::size_t>(c.k), -1);
    int next = 0;
    for (int& col : c.color) {
        if (remap[static_cast<std::size_t>(col)] == -1) remap[static_cast<std::size_t>(col)] = next++;
        col = remap[static_cast<std::size_t>(col)];
    }
    c.k = next;  // declared palette shrinks to the colors actually used
    return c;
}

// Ascending id, lowest free color. Deterministic upper bound witness.
inline Coloring greedy_coloring(const Graph& g) {
    Coloring c;
    c.color.assign(static_cast<std::size_t>(g.n), -1);
    int used = 0;
    std::vector<char> blocked;
    for (int v = 0; v < g.n; ++v) {
        blocked.assign(static_cast<std::size_t>(used + 1), 0);
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (int cw = c.color[static_cast<std::size_t>(w)]; cw >= 0) blocked[static_cast<std::size_t>(cw)] = 1;
        int col = 0;
        while (blocked[static_cast<std::size_t>(col)]) ++col;
        c.color[static_cast<std::size_t>(v)] = col;
        used = std::max(used, col + 1);
    }
    c.k = used;
    return c;
}

enum class SearchOutcome { found, infeasible, budget_exceeded };

struct ColoringOptions {
    long long node_budget = 50'000'000;  // backtracking nodes (color assignments) before giving up
};

struct KColorResult {
    SearchOutcome outcome = SearchOutcome::infeasible;
    std::optional<Coloring> coloring;
    long long nodes = 0;
};

namespace detail {

// Backtracking k-coloring. The next vertex is always one of maximum
// saturation (distinct colors among colored neighbors), ties broken by higher
// degree then lower id; candidate colors run 0..max_used+1 so permuting the
// palette never revisits an equivalent assignment.
struct KColorSearch {
    const Graph& g;
    int k;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<int> color;
    std::vector<std::vector<int>> nbr_count;  // per vertex, per color: colored neighbors
    std::vector<int> saturation;
    int colored = 0;

    KColorSearch(const Graph& graph, int colors, long long node_budget)
        : g(graph),
          k(colors),
          budget(node_budget),
          color(static_cast<std::size_t>(graph.n), -1),
          nbr_count(static_cast<std::size_t>(graph.n), std::vector<int>(static_cast<std::size_t>(colors), 0)),
          saturation(static_cast<std::size_t>(graph.n), 0) {}

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        ++colored;
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(w)] == -1)
                if (nbr_count[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)]++ == 0)
                    ++saturation[static_cast<std::size_t>(w)];
    }

    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        --colored;
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(w)] == -1)
                if (--nbr_count[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 0)
                    --saturation[static_cast<std::size_t>(w)];
    }

    bool dfs(int max_used) {
        if (colored == g.n) return true;
        int v = -1;
        for (int u = 0; u < g.n; ++u) {
            if (color[static_cast<std::size_t>(u)] != -1) continue;
            if (v == -1 || saturation[static_cast<std::size_t>(u)] > saturation[static_cast<std::size_t>(v)] ||
                (saturation[static_cast<std::size_t>(u)] == saturation[static_cast<std::size_t>(v)] &&
                 g.degree(u) > g.degree(v)))
                v = u;
        }
        if (saturation[static_cast<std::size_t>(v)] >= k) return false;  // every color blocked
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (nbr_count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            assign(v, c);
            if (dfs(std::max(max_used, c))) return true;
            unassign(v, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace detail

inline KColorResult is_k_colorable(const Graph& g, int k, const ColoringOptions& opts = {}) {
    if (k < 0) throw std::invalid_argument("color count must be non-negative");
    KColorResult out;
    if (g.n == 0) {
        out.outcome = SearchOutcome::found;
        out.coloring = Coloring{k, {}};
        return out;
    }
    if (k == 0) {
        out.outcome = SearchOutcome::infeasible;
        return out;
    }
    detail::KColorSearch search(g, k, opts.node_budget);
    bool ok = search.dfs(-1);
    out.nodes = search.nodes;
    if (ok) {
        out.outcome = SearchOutcome::found;
        out.coloring = canonicalize_colors(Coloring{k, search.color});
        return out;
    }
    out.outcome = search.out_of_budget ? SearchOutcome::budget_exceeded : SearchOutcome::infeasible;
    return out;
}

struct ChromaticResult {
    SearchOutcome outcome = SearchOutcome::infeasible;
    int value = -1;  // set when outcome == found
    std::optional<Coloring> witness;
    int lower_bound = 0;  // proven bounds, meaningful on budget exhaustion
    int upper_bound = 0;
    long long nodes = 0;
};

// Exact chromatic number: ascend k from the clique lower bound, stopping at
// the first feasible k. The greedy bound caps the ascent; when lower and
// upper bound meet no search runs at all.
inline ChromaticResult chromatic_number(const Graph& g, const ColoringOptions& opts = {}) {
    ChromaticResult out;
    if (g.n == 0) {
        out.outcome = SearchOutcome::found;
        out.value = 0;
        out.witness = Coloring{0, {}};
        return out;
    }
    Coloring greedy = canonicalize_colors(greedy_coloring(g));
    int ub = greedy.k;
    int lb = max_clique_size(g);
    out.lower_bound = lb;
    out.upper_bound = ub;
    for (int k = lb; k <= ub; ++k) {
        if (k == ub) {
            out.outcome = SearchOutcome::found;
            out.value = ub;
            out.witness = greedy;
            return out;
        }
        KColorResult r = is_k_colorable(g, k, ColoringOptions{opts.node_budget - out.nodes});
        out.nodes += r.nodes;
        if (r.outcome == SearchOutcome::found) {
            out.outcome = SearchOutcome::found;
            out.value = k;
            out.witness = std::move(r.coloring);
            out.lower_bound = k;
            out.upper_bound = k;
            return out;
        }
        if (r.outcome == SearchOutcome::budget_exceeded) {
            out.outcome = SearchOutcome::budget_exceeded;
            out.lower_bound = k;  // everything below k is refuted
            return out;
        }
        out.lower_bound = k + 1;
    }
    return out;  // unreachable: k == ub always returns
}

}  // namespace chroma
