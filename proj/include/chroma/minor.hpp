#pragma once

#include "chp.hpp"
#include "cliques.hpp"
#include "graph.hpp"

#include <bit>
#include <optional>

namespace chroma {

struct MinorOptions {
    int vertex_ceiling = 16;  // exact minor search refuses larger hosts
};

class OracleLimitError : public std::runtime_error {
public:
    explicit OracleLimitError(const std::string& what) : std::runtime_error(what) {}
};

// t disjoint branch sets, each inducing a connected subgraph, pairwise
// joined by at least one edge.
struct MinorWitness {
    std::vector<VertexSet> branch_sets;
    int t() const { return static_cast<int>(branch_sets.size()); }
};

struct WitnessCheck {
    bool ok = false;
    std::string diagnostic;
};

inline WitnessCheck verify_minor_witness_explain(const Graph& g, const MinorWitness& w) {
    std::vector<int> owner(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < w.t(); ++i) {
        const VertexSet s = set_normalized(w.branch_sets[static_cast<std::size_t>(i)]);
        if (s.empty()) return {false, "branch set " + std::to_string(i) + " is empty"};
        if (s.size() != w.branch_sets[static_cast<std::size_t>(i)].size())
            return {false, "branch set " + std::to_string(i) + " repeats a vertex"};
        if (s.front() < 0 || s.back() >= g.n)
            return {false, "branch set " + std::to_string(i) + " has a vertex outside 0.." + std::to_string(g.n - 1)};
        for (int v : s) {
            if (owner[static_cast<std::size_t>(v)] != -1)
                return {false, "branch sets " + std::to_string(owner[static_cast<std::size_t>(v)]) + " and " +
                                   std::to_string(i) + " overlap at vertex " + std::to_string(v)};
            owner[static_cast<std::size_t>(v)] = i;
        }
        if (!is_connected(induced_subgraph(g, s).graph))
            return {false, "branch set " + std::to_string(i) + " induces a disconnected subgraph"};
    }
    for (int i = 0; i < w.t(); ++i) {
        for (int j = i + 1; j < w.t(); ++j) {
            bool joined = false;
            for (int v : w.branch_sets[static_cast<std::size_t>(i)]) {
                for (int u : g.adj[static_cast<std::size_t>(v)])
                    if (owner[static_cast<std::size_t>(u)] == j) {
                        joined = true;
                        break;
                    }
                if (joined) break;
            }
            if (!joined)
                return {false, "no edge between branch sets " + std::to_string(i) + " and " + std::to_string(j)};
        }
    }
    return {true, {}};
}

inline bool verify_minor_witness(const Graph& g, const MinorWitness& w) {
    return verify_minor_witness_explain(g, w).ok;
}

struct ContractionResult {
    Graph graph;
    std::vector<int> vertex_map;  // old id -> new id; both endpoints map to the kept vertex
};

// Contract the edge (keep, merge): merge's neighbors move to keep, merge is
// removed and ids above it shift down by one.
inline ContractionResult contract_edge(const Graph& g, int keep, int merge) {
    if (!g.has_edge(keep, merge))
        throw std::invalid_argument("contraction requires an existing edge (" + std::to_string(keep) + "," +
                                    std::to_string(merge) + ")");
    ContractionResult out;
    out.vertex_map.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) out.vertex_map[static_cast<std::size_t>(v)] = v - (v > merge ? 1 : 0);
    out.vertex_map[static_cast<std::size_t>(merge)] = out.vertex_map[static_cast<std::size_t>(keep)];
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = out.vertex_map[static_cast<std::size_t>(u)];
        int b = out.vertex_map[static_cast<std::size_t>(v)];
        if (a != b) edges.emplace_back(a, b);
    }
    out.graph = from_edge_list(g.n - 1, edges);
    return out;
}

namespace detail {

// Exhaustive K_t branch-set search. Vertices are consumed in ascending id;
// each joins an existing branch set, opens the next one, or stays out.
// Branch sets are therefore ordered by their minimum vertex, which removes
// the permutation symmetry between sets. A set may pass through a
// disconnected state (a later vertex can bridge it); soundness comes from
// the completion check plus reachability pruning over the unprocessed
// suffix.
struct MinorSearch {
    int n = 0;
    int t = 0;
    std::vector<std::uint64_t> nbr;
    std::vector<std::uint64_t> sets;

    std::uint64_t nbrs_of(std::uint64_t x) const {
        std::uint64_t out = 0;
        while (x) {
            int v = std::countr_zero(x);
            x &= x - 1;
            out |= nbr[static_cast<std::size_t>(v)];
        }
        return out;
    }

    std::uint64_t closure(std::uint64_t seed, std::uint64_t allowed) const {
        std::uint64_t x = seed & allowed;
        for (;;) {
            std::uint64_t nx = x | (nbrs_of(x) & allowed);
            if (nx == x) return x;
            x = nx;
        }
    }

    bool connected_mask(std::uint64_t s) const {
        return closure(s & (~s + 1), s) == s;  // reach of the lowest bit inside s
    }

    bool adjacent(std::uint64_t a, std::uint64_t b) const { return (nbrs_of(a) & b) != 0; }

    bool complete_now() const {
        if (static_cast<int>(sets.size()) != t) return false;
        for (std::uint64_t s : sets)
            if (!connected_mask(s)) return false;
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                if (!adjacent(sets[i], sets[j])) return false;
        return true;
    }

    // Conservative: never prunes a state that some extension completes.
    bool prune(int v) const {
        int opened = static_cast<int>(sets.size());
        std::uint64_t rest = (v >= 64) ? 0 : (~std::uint64_t{0} << v);
        rest &= (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        int to_open = t - opened;
        if (to_open > std::popcount(rest)) return true;
        if (to_open >= 2) {
            // future sets live entirely inside rest and need pairwise edges there
            long long rest_edges = 0;
            std::uint64_t r = rest;
            while (r) {
                int u = std::countr_zero(r);
                r &= r - 1;
                rest_edges += std::popcount(nbr[static_cast<std::size_t>(u)] & rest);
            }
            rest_edges /= 2;
            if (rest_edges < static_cast<long long>(to_open) * (to_open - 1) / 2) return true;
        }
        std::uint64_t reach[64];
        for (int i = 0; i < opened; ++i) {
            std::uint64_t s = sets[static_cast<std::size_t>(i)];
            std::uint64_t r = closure(s & (~s + 1), s | rest);
            if ((r & s) != s) return true;  // the set can never reconnect
            if (to_open > 0 && (nbrs_of(r) & rest) == 0) return true;  // unreachable by any future set
            reach[i] = r;
        }
        for (int i = 0; i < opened; ++i)
            for (int j = i + 1; j < opened; ++j) {
                if (adjacent(sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)])) continue;
                if (((reach[i] | nbrs_of(reach[i])) & reach[j]) == 0) return true;
            }
        return false;
    }

    bool dfs(int v) {
        if (static_cast<int>(sets.size()) == t && complete_now()) return true;
        if (v == n) return false;
        if (prune(v)) return false;
        std::uint64_t bit = std::uint64_t{1} << v;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            sets[i] |= bit;
            if (dfs(v + 1)) return true;
            sets[i] &= ~bit;
        }
        if (static_cast<int>(sets.size()) < t) {
            sets.push_back(bit);
            if (dfs(v + 1)) return true;
            sets.pop_back();
        }
        return dfs(v + 1);
    }
};

inline void check_minor_limits(const Graph& g, const MinorOptions& opts) {
    if (opts.vertex_ceiling < 1 || opts.vertex_ceiling > 64)
        throw std::invalid_argument("minor search ceiling must be within 1..64");
    if (g.n > opts.vertex_ceiling)
        throw OracleLimitError("oracle limit: graph has " + std::to_string(g.n) + " vertices, ceiling " +
                               std::to_string(opts.vertex_ceiling));
}

}  // namespace detail

// Exact K_t minor test. Returns the first witness in the fixed search order
// (deterministic across runs); the least t-clique short-circuits as t
// singleton branch sets when one exists.
inline std::optional<MinorWitness> has_clique_minor(const Graph& g, int t, const MinorOptions& opts = {}) {
    if (t < 1) throw std::invalid_argument("minor order must be at least 1");
    detail::check_minor_limits(g, opts);
    if (t > g.n) return std::nullopt;
    if (g.edge_count() < static_cast<long long>(t) * (t - 1) / 2) return std::nullopt;
    MinorWitness w;
    if (auto clique = find_clique(g, t)) {
        for (int v : *clique) w.branch_sets.push_back({v});
        return w;
    }
    detail::MinorSearch search;
    search.n = g.n;
    search.t = t;
    search.nbr = adjacency_masks(g);
    if (!search.dfs(0)) return std::nullopt;
    for (std::uint64_t s : search.sets) {
        VertexSet bs;
        for (int v = 0; v < g.n; ++v)
            if (s >> v & 1) bs.push_back(v);
        w.branch_sets.push_back(std::move(bs));
    }
    return w;
}

// Largest t with a K_t minor: ascend from the clique number, stop at the
// first t that fails (minor containment is monotone in t).
inline int hadwiger_number(const Graph& g, const MinorOptions& opts = {}) {
    if (g.n == 0) throw std::invalid_argument("hadwiger number of the empty graph is undefined");
    detail::check_minor_limits(g, opts);
    int h = static_cast<int>(max_clique(g).size());
    for (int t = h + 1; t <= g.n; ++t) {
        if (has_clique_minor(g, t, opts))
            h = t;
        else
            break;
    }
    return h;
}

struct ContractionStep {
    int kept = -1;
    int merged = -1;  // ids in the graph the step was applied to
};

struct PlaneContraction {
    Graph graph;
    std::vector<int> vertex_map;          // original id -> id in graph
    std::vector<ContractionStep> steps;   // in application order
    VertexSet minor_vertices;             // one vertex per branch set, in graph
};

// Contract a connected vertex class down to a realization of its own largest
// clique minor: a covering witness is computed for the class, then every
// branch set is collapsed to a single vertex by contracting class-internal
// edges (lexicographically least eligible edge first). Edges leaving the
// class are inherited by the merged vertices; the rest of the host graph is
// untouched.
inline PlaneContraction contract_class_to_minor(const Graph& g, const VertexSet& cls,
                                                const MinorOptions& opts = {}) {
    VertexSet members = set_normalized(cls);
    if (members.empty()) throw std::invalid_argument("cannot contract an empty vertex class");
    if (members.front() < 0 || members.back() >= g.n)
        throw std::invalid_argument("vertex class member out of range");
    InducedSubgraph sub = induced_subgraph(g, members);
    if (!is_connected(sub.graph)) throw std::invalid_argument("vertex class induces a disconnected subgraph");
    int h = hadwiger_number(sub.graph, opts);
    auto witness = has_clique_minor(sub.graph, h, opts);
    std::vector<VertexSet> local_sets = witness->branch_sets;

    // grow the branch sets until they cover the class: the smallest uncovered
    // vertex joins the lowest-indexed set it has an edge into; connectivity of
    // the class guarantees progress
    std::vector<int> owner(static_cast<std::size_t>(sub.graph.n), -1);
    int covered = 0;
    for (int i = 0; i < static_cast<int>(local_sets.size()); ++i)
        for (int v : local_sets[static_cast<std::size_t>(i)]) {
            owner[static_cast<std::size_t>(v)] = i;
            ++covered;
        }
    while (covered < sub.graph.n) {
        bool progress = false;
        for (int v = 0; v < sub.graph.n && !progress; ++v) {
            if (owner[static_cast<std::size_t>(v)] != -1) continue;
            int best = -1;
            for (int w : sub.graph.adj[static_cast<std::size_t>(v)])
                if (int o = owner[static_cast<std::size_t>(w)]; o != -1 && (best == -1 || o < best)) best = o;
            if (best != -1) {
                owner[static_cast<std::size_t>(v)] = best;
                local_sets[static_cast<std::size_t>(best)].push_back(v);
                ++covered;
                progress = true;
            }
        }
        if (!progress) throw std::logic_error("covering extension stalled on a connected class");
    }

    // host-id branch sets
    std::vector<VertexSet> setlist;
    for (auto& s : local_sets) {
        VertexSet hs;
        for (int v : s) hs.push_back(sub.to_host[static_cast<std::size_t>(v)]);
        setlist.push_back(set_normalized(hs));
    }

    PlaneContraction out;
    out.graph = g;
    out.vertex_map.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) out.vertex_map[static_cast<std::size_t>(v)] = v;
    std::vector<int> set_of(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < static_cast<int>(setlist.size()); ++i)
        for (int v : setlist[static_cast<std::size_t>(i)]) set_of[static_cast<std::size_t>(v)] = i;

    for (;;) {
        int cu = -1, cv = -1;
        for (int u = 0; u < out.graph.n && cu == -1; ++u) {
            if (set_of[static_cast<std::size_t>(u)] == -1) continue;
            for (int v : out.graph.adj[static_cast<std::size_t>(u)])
                if (v > u && set_of[static_cast<std::size_t>(v)] == set_of[static_cast<std::size_t>(u)]) {
                    cu = u;
                    cv = v;
                    break;
                }
        }
        if (cu == -1) break;
        out.steps.push_back({cu, cv});
        ContractionResult r = contract_edge(out.graph, cu, cv);
        out.graph = std::move(r.graph);
        for (int v = 0; v < g.n; ++v)
            out.vertex_map[static_cast<std::size_t>(v)] =
                r.vertex_map[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])];
        std::vector<int> next_set(static_cast<std::size_t>(out.graph.n), -1);
        for (int v = 0; v < static_cast<int>(set_of.size()); ++v)
            if (set_of[static_cast<std::size_t>(v)] != -1)
                next_set[static_cast<std::size_t>(r.vertex_map[static_cast<std::size_t>(v)])] =
                    set_of[static_cast<std::size_t>(v)];
        set_of = std::move(next_set);
    }
    for (int v = 0; v < out.graph.n; ++v)
        if (set_of[static_cast<std::size_t>(v)] != -1) out.minor_vertices.push_back(v);
    return out;
}

// Plane-facing wrapper: contracts the vertex class of one plane. The plane's
// induced subgraph must be connected.
inline PlaneContraction contract_plane_to_minor(const Graph& g, const PlaneAssignment& a, int plane,
                                                const MinorOptions& opts = {}) {
    if (a.n() != g.n) throw std::invalid_argument("assignment size does not match graph");
    if (plane < 0 || plane >= a.plane_count) throw std::invalid_argument("unknown plane " + std::to_string(plane));
    VertexSet cls = a.plane_vertices(plane);
    if (cls.empty()) throw std::invalid_argument("plane " + std::to_string(plane) + " is empty");
    return contract_class_to_minor(g, cls, opts);
}

}  // namespace chroma
