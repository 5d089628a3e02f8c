#pragma once

#include "coloring.hpp"
#include "minor.hpp"

#include <optional>

namespace chroma {

enum class ResidualPolicy {
    process_all,    // every component is eventually placed
    discard_paper,  // only the strongest component survives each split
};

inline const char* residual_policy_name(ResidualPolicy p) {
    return p == ResidualPolicy::process_all ? "process-all" : "discard-paper";
}

struct FillConfig {
    int capacity = 4;
    PlacementMode placement = PlacementMode::capacity4;
    ResidualPolicy residual = ResidualPolicy::process_all;
    MinorOptions minor;
    ColoringOptions coloring;
};

class FillError : public std::runtime_error {
public:
    explicit FillError(const std::string& what) : std::runtime_error(what) {}
};

struct ResidualComponent {
    VertexSet vertices;
    int hadwiger = 0;
};

// One plane's history: which component steered it, the seed and its colors,
// every later placement in order, connectivity at the moment the plane
// closed, and how the residual looked afterwards.
struct IterationRecord {
    int plane = -1;
    VertexSet subg;
    VertexSet seed_set;
    std::vector<int> seed_colors;  // parallel to seed_set
    std::vector<std::pair<int, int>> placements;
    bool connected_at_close = false;
    std::vector<ResidualComponent> residual_components;  // ranked: hadwiger desc, then min id
    std::optional<VertexSet> chosen_next;
    std::vector<VertexSet> discarded;  // dropped at this split under discard_paper
};

struct Decomposition {
    FillConfig config;
    PlaneAssignment assignment;
    std::vector<IterationRecord> trace;
    VertexSet unplaced;  // nonempty only under discard_paper
    std::vector<ResidualComponent> initial_components;
    VertexSet chosen_initial;
};

// Smallest vertex set (by size, then lexicographic) whose induced subgraph
// has a K4 minor; when the graph has none at all, the whole vertex set.
inline VertexSet find_k4_seed(const Graph& g, const MinorOptions& opts = {}) {
    detail::check_minor_limits(g, opts);
    VertexSet all(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) all[static_cast<std::size_t>(v)] = v;
    if (g.n < 4 || !has_clique_minor(g, 4, opts)) return all;
    for (int k = 4; k <= g.n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            if (has_clique_minor(induced_subgraph(g, idx).graph, 4, opts)) return idx;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == g.n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return all;  // unreachable when a K4 minor exists
}

// Connected components of the subgraph induced on `within`, each paired with
// its exact hadwiger number, strongest first (ties: smaller minimum id).
inline std::vector<ResidualComponent> ranked_components(const Graph& g, const VertexSet& within,
                                                        const MinorOptions& opts = {}) {
    std::vector<ResidualComponent> out;
    InducedSubgraph sub = induced_subgraph(g, within);
    for (const VertexSet& local : connected_components(sub.graph)) {
        ResidualComponent rc;
        for (int v : local) rc.vertices.push_back(sub.to_host[static_cast<std::size_t>(v)]);
        rc.hadwiger = hadwiger_number(induced_subgraph(g, rc.vertices).graph, opts);
        out.push_back(std::move(rc));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ResidualComponent& a, const ResidualComponent& b) { return a.hadwiger > b.hadwiger; });
    return out;
}

// Fill planes one at a time: seed a new plane from the strongest remaining
// component, color the seed exactly, then repeatedly place the lowest
// unassigned vertex the plane still accepts (lowest available color),
// rescanning after every placement. The plane closes when nothing fits;
// the residual is split into components and the strongest steers the next
// plane. Under discard_paper the weaker components are dropped instead of
// queued.
inline Decomposition chromatic_fill(const Graph& g, const FillConfig& cfg = {}) {
    Decomposition d;
    d.config = cfg;
    d.assignment = PlaneAssignment(g.n, cfg.capacity);
    if (g.n == 0) return d;

    std::vector<char> pending(static_cast<std::size_t>(g.n), 1);
    auto pending_set = [&] {
        VertexSet s;
        for (int v = 0; v < g.n; ++v)
            if (pending[static_cast<std::size_t>(v)]) s.push_back(v);
        return s;
    };
    auto drop_components = [&](const std::vector<ResidualComponent>& ranked, std::vector<VertexSet>* sink) {
        for (std::size_t i = 1; i < ranked.size(); ++i) {
            if (sink) sink->push_back(ranked[i].vertices);
            for (int v : ranked[i].vertices) {
                pending[static_cast<std::size_t>(v)] = 0;
                d.unplaced.push_back(v);
            }
        }
    };

    d.initial_components = ranked_components(g, pending_set(), cfg.minor);
    d.chosen_initial = d.initial_components.front().vertices;
    VertexSet subg = d.chosen_initial;
    if (cfg.residual == ResidualPolicy::discard_paper) drop_components(d.initial_components, nullptr);

    for (;;) {
        IterationRecord rec;
        rec.plane = d.assignment.plane_count++;
        rec.subg = subg;

        rec.seed_set = [&] {
            InducedSubgraph sub = induced_subgraph(g, subg);
            VertexSet host;
            for (int v : find_k4_seed(sub.graph, cfg.minor)) host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
            return host;
        }();
        ChromaticResult seed_chi = chromatic_number(induced_subgraph(g, rec.seed_set).graph, cfg.coloring);
        if (seed_chi.outcome != SearchOutcome::found)
            throw FillError("seed coloring did not finish within the node budget");
        if (seed_chi.value > cfg.capacity)
            throw FillError("seed needs " + std::to_string(seed_chi.value) + " colors but plane capacity is " +
                            std::to_string(cfg.capacity));
        for (std::size_t i = 0; i < rec.seed_set.size(); ++i) {
            int v = rec.seed_set[i];
            rec.seed_colors.push_back(seed_chi.witness->color[i]);
            d.assignment.plane_of[static_cast<std::size_t>(v)] = rec.plane;
            d.assignment.color_of[static_cast<std::size_t>(v)] = seed_chi.witness->color[i];
            pending[static_cast<std::size_t>(v)] = 0;
        }

        for (;;) {
            int placed = -1;
            for (int v = 0; v < g.n && placed == -1; ++v) {
                if (!pending[static_cast<std::size_t>(v)]) continue;
                PlacementDecision dec = is_placeable(g, d.assignment, rec.plane, v, cfg.placement);
                if (!dec.placeable) continue;
                int color = dec.available.front();
                d.assignment.plane_of[static_cast<std::size_t>(v)] = rec.plane;
                d.assignment.color_of[static_cast<std::size_t>(v)] = color;
                pending[static_cast<std::size_t>(v)] = 0;
                rec.placements.emplace_back(v, color);
                placed = v;
            }
            if (placed == -1) break;
        }

        rec.connected_at_close =
            is_connected(induced_subgraph(g, d.assignment.plane_vertices(rec.plane)).graph);

        VertexSet rest = pending_set();
        if (rest.empty()) {
            d.trace.push_back(std::move(rec));
            break;
        }
        rec.residual_components = ranked_components(g, rest, cfg.minor);
        rec.chosen_next = rec.residual_components.front().vertices;
        subg = *rec.chosen_next;
        if (cfg.residual == ResidualPolicy::discard_paper) drop_components(rec.residual_components, &rec.discarded);
        d.trace.push_back(std::move(rec));
    }
    d.unplaced = set_normalized(d.unplaced);
    return d;
}

struct ValidationCheck {
    std::string name;
    bool core = true;
    bool pass = false;
    std::string diagnostic;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_core_pass() const {
        for (const auto& c : checks)
            if (c.core && !c.pass) return false;
        return true;
    }
    const ValidationCheck* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Re-checks a finished decomposition from scratch: partition of the vertex
// set, plane bookkeeping, per-plane proper use of at most `capacity` colors
// confirmed against the exact coloring oracle, a faithful trace replay, and
// the combined coloring that certifies chi(G) <= capacity * planes. Plane
// connectivity is reported too but is informational: the filling loop does
// not promise it.
inline ValidationReport validate_decomposition(const Graph& g, const Decomposition& d) {
    ValidationReport report;
    auto add = [&](std::string name, bool core, bool pass, std::string diag) {
        report.checks.push_back({std::move(name), core, pass, std::move(diag)});
    };
    const PlaneAssignment& a = d.assignment;
    const int cap = d.config.capacity;

    {
        bool pass = a.n() == g.n && cap == a.capacity;
        std::string diag = pass ? "" : "assignment shape does not match the graph or config";
        if (pass) {
            std::vector<char> unplaced_mark(static_cast<std::size_t>(g.n), 0);
            for (int v : d.unplaced) {
                if (v < 0 || v >= g.n || unplaced_mark[static_cast<std::size_t>(v)]) {
                    pass = false;
                    diag = "unplaced list is not a set of vertices";
                    break;
                }
                unplaced_mark[static_cast<std::size_t>(v)] = 1;
            }
            for (int v = 0; pass && v < g.n; ++v) {
                bool assigned = a.assigned(v);
                bool dropped = unplaced_mark[static_cast<std::size_t>(v)];
                if (assigned == dropped) {
                    pass = false;
                    diag = "vertex " + std::to_string(v) + (assigned ? " is both placed and unplaced" : " is neither placed nor unplaced");
                }
            }
            if (pass && d.config.residual == ResidualPolicy::process_all && !d.unplaced.empty()) {
                pass = false;
                diag = "unplaced vertices under the process-all policy";
            }
        }
        add("coverage", true, pass, std::move(diag));
    }

    {
        bool pass = a.n() == g.n;
        std::string diag = pass ? "" : "assignment size mismatch";
        for (int v = 0; pass && v < g.n; ++v) {
            if (!a.assigned(v)) continue;
            int p = a.plane_of[static_cast<std::size_t>(v)];
            int c = a.color_of[static_cast<std::size_t>(v)];
            if (p < 0 || p >= a.plane_count || c < 0 || c >= cap) {
                pass = false;
                diag = "vertex " + std::to_string(v) + " has plane " + std::to_string(p) + ", color " +
                       std::to_string(c) + " outside the declared ranges";
            }
        }
        for (int p = 0; pass && p < a.plane_count; ++p)
            if (a.plane_vertices(p).empty()) {
                pass = false;
                diag = "plane " + std::to_string(p) + " is empty";
            }
        add("plane-structure", true, pass, std::move(diag));
    }

    {
        bool pass = true;
        std::string diag;
        if (a.n() == g.n) {
            for (auto [u, v] : g.edges()) {
                if (!a.assigned(u) || !a.assigned(v)) continue;
                if (a.plane_of[static_cast<std::size_t>(u)] != a.plane_of[static_cast<std::size_t>(v)]) continue;
                if (a.color_of[static_cast<std::size_t>(u)] == a.color_of[static_cast<std::size_t>(v)]) {
                    pass = false;
                    diag = "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is monochromatic on plane " +
                           std::to_string(a.plane_of[static_cast<std::size_t>(u)]);
                    break;
                }
            }
        } else {
            pass = false;
            diag = "assignment size mismatch";
        }
        add("plane-properness", true, pass, std::move(diag));
    }

    {
        bool pass = a.n() == g.n;
        std::string diag = pass ? "" : "assignment size mismatch";
        for (int p = 0; pass && p < a.plane_count; ++p) {
            VertexSet cls = a.plane_vertices(p);
            if (cls.empty()) continue;
            if (plane_chromatic_number(a, p) > cap) {
                pass = false;
                diag = "plane " + std::to_string(p) + " uses more than " + std::to_string(cap) + " colors";
                break;
            }
            ChromaticResult chi = chromatic_number(induced_subgraph(g, cls).graph, d.config.coloring);
            if (chi.outcome != SearchOutcome::found) {
                pass = false;
                diag = "coloring oracle ran out of budget on plane " + std::to_string(p);
                break;
            }
            if (chi.value > cap) {
                pass = false;
                diag = "plane " + std::to_string(p) + " induces a subgraph needing " + std::to_string(chi.value) +
                       " colors";
                break;
            }
        }
        add("plane-colorability", true, pass, std::move(diag));
    }

    {
        bool pass = a.n() == g.n;
        std::string diag = pass ? "" : "assignment size mismatch";
        PlaneAssignment replay(pass ? g.n : 0, cap);
        for (std::size_t r = 0; pass && r < d.trace.size(); ++r) {
            const IterationRecord& rec = d.trace[r];
            if (rec.plane != static_cast<int>(r)) {
                pass = false;
                diag = "trace record " + std::to_string(r) + " claims plane " + std::to_string(rec.plane);
                break;
            }
            replay.plane_count = rec.plane + 1;
            if (rec.seed_set.empty() || rec.seed_colors.size() != rec.seed_set.size()) {
                pass = false;
                diag = "trace record " + std::to_string(r) + " has a malformed seed";
                break;
            }
            for (std::size_t i = 0; pass && i < rec.seed_set.size(); ++i) {
                int v = rec.seed_set[i];
                int c = rec.seed_colors[i];
                if (v < 0 || v >= g.n || replay.assigned(v) || c < 0 || c >= cap) {
                    pass = false;
                    diag = "seed of plane " + std::to_string(rec.plane) + " reuses or misplaces vertex " +
                           std::to_string(v);
                    break;
                }
                replay.plane_of[static_cast<std::size_t>(v)] = rec.plane;
                replay.color_of[static_cast<std::size_t>(v)] = c;
            }
            for (std::size_t i = 0; pass && i < rec.placements.size(); ++i) {
                auto [v, c] = rec.placements[i];
                if (v < 0 || v >= g.n || replay.assigned(v) || set_contains(rec.seed_set, v)) {
                    pass = false;
                    diag = "placement of vertex " + std::to_string(v) + " on plane " + std::to_string(rec.plane) +
                           " is out of order";
                    break;
                }
                PlacementDecision dec = is_placeable(g, replay, rec.plane, v, d.config.placement);
                if (!dec.placeable || !set_contains(dec.available, c)) {
                    pass = false;
                    diag = "placement of vertex " + std::to_string(v) + " with color " + std::to_string(c) +
                           " on plane " + std::to_string(rec.plane) + " does not replay";
                    break;
                }
                replay.plane_of[static_cast<std::size_t>(v)] = rec.plane;
                replay.color_of[static_cast<std::size_t>(v)] = c;
            }
            if (pass) {
                bool conn = is_connected(induced_subgraph(g, replay.plane_vertices(rec.plane)).graph);
                if (conn != rec.connected_at_close) {
                    pass = false;
                    diag = "plane " + std::to_string(rec.plane) + " connectivity flag does not match its vertex set";
                }
            }
        }
        if (pass && !(replay == a)) {
            pass = false;
            diag = "replaying the trace does not reproduce the assignment";
        }
        add("trace-replay", true, pass, std::move(diag));
    }

    {
        bool pass = a.n() == g.n;
        std::string diag = pass ? "" : "assignment size mismatch";
        if (pass) {
            for (auto [u, v] : g.edges()) {
                if (!a.assigned(u) || !a.assigned(v)) continue;
                long long cu = static_cast<long long>(a.plane_of[static_cast<std::size_t>(u)]) * cap +
                               a.color_of[static_cast<std::size_t>(u)];
                long long cv = static_cast<long long>(a.plane_of[static_cast<std::size_t>(v)]) * cap +
                               a.color_of[static_cast<std::size_t>(v)];
                if (cu == cv) {
                    pass = false;
                    diag = "combined coloring repeats on edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
                    break;
                }
            }
        }
        add("combined-coloring", true, pass, std::move(diag));
    }

    {
        bool pass = a.n() == g.n;
        std::string diag = pass ? "" : "assignment size mismatch";
        for (int p = 0; pass && p < a.plane_count; ++p) {
            VertexSet cls = a.plane_vertices(p);
            if (!cls.empty() && !is_connected(induced_subgraph(g, cls).graph)) {
                pass = false;
                diag = "plane " + std::to_string(p) + " induces a disconnected subgraph";
            }
        }
        add("plane-connectivity", false, pass, std::move(diag));
    }
    return report;
}

}  // namespace chroma
