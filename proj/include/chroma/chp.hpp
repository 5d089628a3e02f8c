#pragma once

#include "graph.hpp"

namespace chroma {

enum class PlacementMode { capacity4, strict_lemma2 };

inline const char* placement_mode_name(PlacementMode m) {
    return m == PlacementMode::capacity4 ? "capacity4" : "strict-lemma2";
}

// Assignment of vertices to chromatic planes, each vertex carrying a color
// local to its plane. plane_of/color_of are -1 for vertices not (yet)
// assigned; a vertex has a color exactly when it has a plane.
struct PlaneAssignment {
    int capacity = 4;
    int plane_count = 0;
    std::vector<int> plane_of;
    std::vector<int> color_of;

    PlaneAssignment() = default;
    explicit PlaneAssignment(int n, int cap = 4) : capacity(cap) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        if (cap < 1 || cap > 64) throw std::invalid_argument("plane capacity must be within 1..64");
        plane_of.assign(static_cast<std::size_t>(n), -1);
        color_of.assign(static_cast<std::size_t>(n), -1);
    }

    int n() const { return static_cast<int>(plane_of.size()); }
    bool assigned(int v) const { return plane_of[static_cast<std::size_t>(v)] >= 0; }

    bool total() const {
        for (int p : plane_of)
            if (p < 0) return false;
        return true;
    }

    VertexSet plane_vertices(int p) const {
        VertexSet out;
        for (int v = 0; v < n(); ++v)
            if (plane_of[static_cast<std::size_t>(v)] == p) out.push_back(v);
        return out;
    }

    VertexSet assigned_vertices() const {
        VertexSet out;
        for (int v = 0; v < n(); ++v)
            if (assigned(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const PlaneAssignment&, const PlaneAssignment&) = default;
};

struct EdgeClassification {
    std::vector<std::vector<std::pair<int, int>>> plane_edges;  // indexed by plane
    std::vector<std::pair<int, int>> non_plane_edges;
};

// Splits E(G) into same-plane and cross-plane edges. Requires a total
// assignment; classify a projected pallet instead for partial ones.
inline EdgeClassification classify_edges(const Graph& g, const PlaneAssignment& a) {
    if (a.n() != g.n) throw std::invalid_argument("assignment size does not match graph");
    if (!a.total()) throw std::invalid_argument("assignment does not cover every vertex");
    EdgeClassification out;
    out.plane_edges.resize(static_cast<std::size_t>(a.plane_count));
    for (auto [u, v] : g.edges()) {
        int pu = a.plane_of[static_cast<std::size_t>(u)];
        int pv = a.plane_of[static_cast<std::size_t>(v)];
        if (pu == pv)
            out.plane_edges[static_cast<std::size_t>(pu)].emplace_back(u, v);
        else
            out.non_plane_edges.emplace_back(u, v);
    }
    return out;
}

namespace detail {

// Distinct colors currently used on plane p; 0 for an empty plane.
inline int plane_color_count(const PlaneAssignment& a, int p) {
    std::vector<char> seen(static_cast<std::size_t>(a.capacity), 0);
    int count = 0;
    for (int v = 0; v < a.n(); ++v)
        if (a.plane_of[static_cast<std::size_t>(v)] == p) {
            int c = a.color_of[static_cast<std::size_t>(v)];
            if (c >= 0 && c < a.capacity && !seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                ++count;
            }
        }
    return count;
}

}  // namespace detail

inline int plane_chromatic_number(const PlaneAssignment& a, int p) {
    if (p < 0 || p >= a.plane_count) throw std::invalid_argument("unknown plane " + std::to_string(p));
    int count = detail::plane_color_count(a, p);
    if (count == 0) throw std::invalid_argument("plane " + std::to_string(p) + " is empty");
    return count;
}

struct PlacementDecision {
    bool placeable = false;
    std::vector<int> available;  // colors not used by v's neighbors on the plane, ascending
};

// Placement test for an unassigned vertex v against plane p. Let D be the
// set of distinct colors among v's neighbors already on p. Under capacity4,
// v is placeable iff |D| < capacity; under strict_lemma2, iff |D| is below
// the number of colors the plane currently uses.
inline PlacementDecision is_placeable(const Graph& g, const PlaneAssignment& a, int p, int v,
                                      PlacementMode mode = PlacementMode::capacity4) {
    if (a.n() != g.n) throw std::invalid_argument("assignment size does not match graph");
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    if (a.assigned(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is already assigned");
    if (p < 0 || p >= a.plane_count) throw std::invalid_argument("unknown plane " + std::to_string(p));
    std::vector<char> blocked(static_cast<std::size_t>(a.capacity), 0);
    int distinct = 0;
    for (int w : g.adj[static_cast<std::size_t>(v)])
        if (a.plane_of[static_cast<std::size_t>(w)] == p) {
            int c = a.color_of[static_cast<std::size_t>(w)];
            if (!blocked[static_cast<std::size_t>(c)]) {
                blocked[static_cast<std::size_t>(c)] = 1;
                ++distinct;
            }
        }
    PlacementDecision out;
    for (int c = 0; c < a.capacity; ++c)
        if (!blocked[static_cast<std::size_t>(c)]) out.available.push_back(c);
    int bound = (mode == PlacementMode::capacity4) ? a.capacity : detail::plane_color_count(a, p);
    out.placeable = distinct < bound;
    return out;
}

// Induced subgraph on the union of the chosen planes' vertex classes.
inline InducedSubgraph project_pallet(const Graph& g, const PlaneAssignment& a, const std::vector<int>& planes) {
    if (a.n() != g.n) throw std::invalid_argument("assignment size does not match graph");
    if (planes.empty()) throw std::invalid_argument("pallet projection needs at least one plane");
    std::vector<char> pick(static_cast<std::size_t>(a.plane_count), 0);
    for (int p : planes) {
        if (p < 0 || p >= a.plane_count) throw std::invalid_argument("unknown plane " + std::to_string(p));
        pick[static_cast<std::size_t>(p)] = 1;
    }
    VertexSet members;
    for (int v = 0; v < g.n; ++v) {
        int p = a.plane_of[static_cast<std::size_t>(v)];
        if (p >= 0 && pick[static_cast<std::size_t>(p)]) members.push_back(v);
    }
    return induced_subgraph(g, members);
}

}  // namespace chroma
