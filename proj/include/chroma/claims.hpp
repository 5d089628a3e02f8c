#pragma once

#include "filling.hpp"
#include "generators.hpp"
#include "rng.hpp"

#include <atomic>
#include <cstdio>
#include <map>
#include <optional>
#include <thread>

namespace chroma {

enum class ClaimStatus { holds, violated, inconclusive };

inline const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::violated: return "violated";
        default: return "inconclusive";
    }
}

// Everything needed to re-run a check away from the original context.
struct ClaimWitness {
    std::optional<Graph> graph;
    std::optional<Graph> graph_b;  // second graph for pairwise claims
    std::optional<Decomposition> decomposition;
    std::string detail;
};

struct ClaimVerdict {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::inconclusive;
    std::optional<ClaimWitness> witness;
    long long instances = 0;  // sub-cases this verdict aggregates
    std::string note;
    std::vector<ClaimVerdict> subclaims;
};

struct CheckOptions {
    MinorOptions minor;
    ColoringOptions coloring;
    std::optional<int> chi;  // cached values for the graph under test
    std::optional<int> h;
};

inline std::string fill_combo_label(const FillConfig& c) {
    return std::string(placement_mode_name(c.placement)) + "+" + residual_policy_name(c.residual);
}

namespace detail {

inline int cached_chi(const Graph& g, const CheckOptions& opts) {
    if (opts.chi) return *opts.chi;
    ChromaticResult r = chromatic_number(g, opts.coloring);
    if (r.outcome != SearchOutcome::found)
        throw std::runtime_error("coloring oracle exhausted its node budget");
    return r.value;
}

inline int cached_h(const Graph& g, const CheckOptions& opts) {
    if (opts.h) return *opts.h;
    return hadwiger_number(g, opts.minor);
}

// Map every host vertex through the running contraction maps of earlier
// planes, then contract each connected piece of one plane's class.
struct SequentialContractor {
    Graph current;
    std::vector<int> to_current;  // original id -> current id

    explicit SequentialContractor(const Graph& g) : current(g), to_current(static_cast<std::size_t>(g.n)) {
        for (int v = 0; v < g.n; ++v) to_current[static_cast<std::size_t>(v)] = v;
    }

    void contract_piece(const VertexSet& original_piece, const MinorOptions& opts) {
        VertexSet now;
        for (int v : original_piece) now.push_back(to_current[static_cast<std::size_t>(v)]);
        PlaneContraction step = contract_class_to_minor(current, set_normalized(now), opts);
        current = step.graph;
        for (int v = 0; v < static_cast<int>(to_current.size()); ++v)
            to_current[static_cast<std::size_t>(v)] =
                step.vertex_map[static_cast<std::size_t>(to_current[static_cast<std::size_t>(v)])];
    }
};

// Connected pieces of one plane's class, in original coordinates. Other
// planes' contractions never touch edges inside this class, so the split is
// stable across the whole sequence.
inline std::vector<VertexSet> plane_pieces(const Graph& g, const PlaneAssignment& a, int plane) {
    VertexSet cls = a.plane_vertices(plane);
    InducedSubgraph sub = induced_subgraph(g, cls);
    std::vector<VertexSet> out;
    for (const VertexSet& local : connected_components(sub.graph)) {
        VertexSet host;
        for (int v : local) host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
        out.push_back(std::move(host));
    }
    return out;
}

}  // namespace detail

// The five-vertex complete graph laid out as one full plane of four plus a
// one-vertex plane: removing any one of the four cross edges must drop the
// largest clique minor from 5 to 4.
inline ClaimVerdict check_fig1(const CheckOptions& opts = {}) {
    ClaimVerdict v;
    v.claim_id = "FIG1";
    Graph k5 = complete(5);
    PlaneAssignment a(5, 4);
    a.plane_count = 2;
    for (int i = 0; i < 4; ++i) {
        a.plane_of[static_cast<std::size_t>(i)] = 0;
        a.color_of[static_cast<std::size_t>(i)] = i;
    }
    a.plane_of[4] = 1;
    a.color_of[4] = 0;
    try {
        if (hadwiger_number(k5, opts.minor) != 5) {
            v.status = ClaimStatus::violated;
            v.witness = ClaimWitness{k5, std::nullopt, std::nullopt, "intact graph does not reach order 5"};
            return v;
        }
        EdgeClassification cls = classify_edges(k5, a);
        if (cls.non_plane_edges.size() != 4) {
            v.status = ClaimStatus::violated;
            v.witness = ClaimWitness{k5, std::nullopt, std::nullopt,
                                     "expected 4 cross edges, classified " +
                                         std::to_string(cls.non_plane_edges.size())};
            return v;
        }
        for (auto [x, y] : cls.non_plane_edges) {
            Graph cut = without_edge(k5, x, y);
            ++v.instances;
            if (int h = hadwiger_number(cut, opts.minor); h != 4) {
                v.status = ClaimStatus::violated;
                v.witness = ClaimWitness{cut, std::nullopt, std::nullopt,
                                         "removing cross edge (" + std::to_string(x) + "," + std::to_string(y) +
                                             ") left order " + std::to_string(h)};
                return v;
            }
        }
        v.status = ClaimStatus::holds;
    } catch (const OracleLimitError& e) {
        v.status = ClaimStatus::inconclusive;
        v.note = e.what();
    }
    return v;
}

// Contracting every plane down to its minor must not change the largest
// clique minor of the whole graph. Disconnected planes are contracted piece
// by piece so the check still decides.
inline ClaimVerdict check_L1(const Graph& g, const Decomposition& d, const CheckOptions& opts = {}) {
    ClaimVerdict v;
    v.claim_id = "L1";
    v.instances = 1;
    try {
        int before = detail::cached_h(g, opts);
        detail::SequentialContractor ctr(g);
        for (int p = 0; p < d.assignment.plane_count; ++p)
            for (const VertexSet& piece : detail::plane_pieces(g, d.assignment, p))
                ctr.contract_piece(piece, opts.minor);
        int after = hadwiger_number(ctr.current, opts.minor);
        if (after == before) {
            v.status = ClaimStatus::holds;
        } else {
            v.status = ClaimStatus::violated;
            v.witness = ClaimWitness{g, std::nullopt, d,
                                     "largest clique minor went from " + std::to_string(before) + " to " +
                                         std::to_string(after) + " after contracting all planes"};
        }
    } catch (const OracleLimitError& e) {
        v.status = ClaimStatus::inconclusive;
        v.note = e.what();
    } catch (const std::runtime_error& e) {
        v.status = ClaimStatus::inconclusive;
        v.note = e.what();
    }
    return v;
}

// Edge classification is all-or-nothing: an edge is a plane edge exactly
// when its endpoints share a plane, and the classification partitions the
// edge set. Checked on the assigned part of the graph.
inline ClaimVerdict check_classification(const Graph& g, const Decomposition& d) {
    ClaimVerdict v;
    v.claim_id = "C2.1";
    v.instances = 1;
    Graph host;
    PlaneAssignment a(0, d.config.capacity);
    if (d.unplaced.empty() && d.assignment.total() == g.n) {
        host = g;
        a = d.assignment;
    } else {
        VertexSet placed = d.assignment.assigned_vertices();
        InducedSubgraph sub = induced_subgraph(g, placed);
        host = sub.graph;
        a = PlaneAssignment(host.n, d.config.capacity);
        a.plane_count = d.assignment.plane_count;
        for (int local = 0; local < host.n; ++local) {
            int orig = sub.to_host[static_cast<std::size_t>(local)];
            a.plane_of[static_cast<std::size_t>(local)] = d.assignment.plane_of[static_cast<std::size_t>(orig)];
            a.color_of[static_cast<std::size_t>(local)] = d.assignment.color_of[static_cast<std::size_t>(orig)];
        }
    }
    EdgeClassification cls = classify_edges(host, a);
    long long classified = static_cast<long long>(cls.non_plane_edges.size());
    for (const auto& plane_list : cls.plane_edges) classified += static_cast<long long>(plane_list.size());
    if (classified != host.edge_count()) {
        v.status = ClaimStatus::violated;
        v.witness = ClaimWitness{host, std::nullopt, d,
                                 "classified " + std::to_string(classified) + " edges out of " +
                                     std::to_string(host.edge_count())};
        return v;
    }
    for (int p = 0; p < static_cast<int>(cls.plane_edges.size()); ++p)
        for (auto [x, y] : cls.plane_edges[static_cast<std::size_t>(p)])
            if (a.plane_of[static_cast<std::size_t>(x)] != p || a.plane_of[static_cast<std::size_t>(y)] != p) {
                v.status = ClaimStatus::violated;
                v.witness = ClaimWitness{host, std::nullopt, d,
                                         "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                             ") filed under plane " + std::to_string(p) +
                                             " without both endpoints there"};
                return v;
            }
    for (auto [x, y] : cls.non_plane_edges)
        if (a.plane_of[static_cast<std::size_t>(x)] == a.plane_of[static_cast<std::size_t>(y)]) {
            v.status = ClaimStatus::violated;
            v.witness = ClaimWitness{host, std::nullopt, d,
                                     "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                         ") crosses planes yet both endpoints share plane " +
                                         std::to_string(a.plane_of[static_cast<std::size_t>(x)])};
            return v;
        }
    v.status = ClaimStatus::holds;
    return v;
}

// Contract every plane to its minor and test whether the minor vertices of
// all planes form a complete graph. Requires every plane's induced subgraph
// to be connected; otherwise the hypothesis is unmet and the verdict is
// inconclusive.
inline ClaimVerdict check_completeness(const Graph& g, const Decomposition& d, const CheckOptions& opts = {}) {
    ClaimVerdict v;
    v.claim_id = "C2.5";
    v.instances = 1;
    auto mirror = [&v](const char* id, const char* how) {
        ClaimVerdict s;
        s.claim_id = id;
        s.status = v.status;
        s.instances = v.instances;
        s.witness = v.witness;
        s.note = v.note.empty() ? how : v.note;
        return s;
    };
    auto finish = [&]() {
        v.subclaims.push_back(mirror("C2.2", "same contraction, pairwise-connection reading"));
        v.subclaims.push_back(mirror("C2.4", "same contraction, joint-completeness reading"));
        v.subclaims.push_back(mirror("C3.3", "same contraction, after-filling reading"));
        return v;
    };
    for (int p = 0; p < d.assignment.plane_count; ++p) {
        VertexSet cls = d.assignment.plane_vertices(p);
        if (!cls.empty() && !is_connected(induced_subgraph(g, cls).graph)) {
            v.status = ClaimStatus::inconclusive;
            v.note = "plane " + std::to_string(p) + " induces a disconnected subgraph; contraction hypothesis unmet";
            return finish();
        }
    }
    try {
        detail::SequentialContractor ctr(g);
        for (int p = 0; p < d.assignment.plane_count; ++p)
            ctr.contract_piece(d.assignment.plane_vertices(p), opts.minor);
        std::vector<int> plane_of_minor(static_cast<std::size_t>(ctr.current.n), -1);
        VertexSet minors;
        for (int p = 0; p < d.assignment.plane_count; ++p)
            for (int orig : d.assignment.plane_vertices(p)) {
                int cur = ctr.to_current[static_cast<std::size_t>(orig)];
                plane_of_minor[static_cast<std::size_t>(cur)] = p;
                minors.push_back(cur);
            }
        minors = set_normalized(minors);
        for (std::size_t i = 0; i < minors.size(); ++i)
            for (std::size_t j = i + 1; j < minors.size(); ++j)
                if (!ctr.current.has_edge(minors[i], minors[j])) {
                    v.status = ClaimStatus::violated;
                    v.witness = ClaimWitness{
                        g, std::nullopt, d,
                        "minor vertices " + std::to_string(minors[i]) + " (plane " +
                            std::to_string(plane_of_minor[static_cast<std::size_t>(minors[i])]) + ") and " +
                            std::to_string(minors[j]) + " (plane " +
                            std::to_string(plane_of_minor[static_cast<std::size_t>(minors[j])]) +
                            ") are not adjacent after contraction"};
                    return finish();
                }
        v.status = ClaimStatus::holds;
        v.note = std::to_string(minors.size()) + " minor vertices form a complete graph";
    } catch (const OracleLimitError& e) {
        v.status = ClaimStatus::inconclusive;
        v.note = e.what();
    }
    return finish();
}

// Monotonicity claim: a strictly larger clique minor should force a strictly
// larger chromatic number. Tested over all ordered pairs of the corpus.
inline ClaimVerdict check_C26_values(const std::vector<Graph>& corpus,
                                     const std::vector<std::optional<std::pair<int, int>>>& chi_h) {
    ClaimVerdict v;
    v.claim_id = "C2.6";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!chi_h[i]) continue;
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            if (i == j || !chi_h[j]) continue;
            auto [chi_i, h_i] = *chi_h[i];
            auto [chi_j, h_j] = *chi_h[j];
            if (h_i <= h_j) continue;
            ++v.instances;
            if (chi_i <= chi_j) {
                v.status = ClaimStatus::violated;
                v.witness = ClaimWitness{corpus[i], corpus[j], std::nullopt,
                                         "first graph: minor order " + std::to_string(h_i) + ", chromatic number " +
                                             std::to_string(chi_i) + "; second graph: minor order " +
                                             std::to_string(h_j) + ", chromatic number " + std::to_string(chi_j)};
                return v;
            }
        }
    }
    if (v.instances == 0) {
        v.status = ClaimStatus::inconclusive;
        v.note = "no pair with strictly larger minor order";
    } else {
        v.status = ClaimStatus::holds;
    }
    return v;
}

inline ClaimVerdict check_C26(const std::vector<Graph>& corpus, const CheckOptions& opts = {}) {
    std::vector<std::optional<std::pair<int, int>>> chi_h(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        try {
            CheckOptions fresh{opts.minor, opts.coloring, std::nullopt, std::nullopt};
            chi_h[i] = std::make_pair(detail::cached_chi(corpus[i], fresh), detail::cached_h(corpus[i], fresh));
        } catch (const std::runtime_error&) {
            chi_h[i] = std::nullopt;
        }
    }
    return check_C26_values(corpus, chi_h);
}

// The decomposition itself is sound: validate_decomposition's core checks
// all pass. The replay soundness (every placement used an available color)
// is surfaced as its own sub-verdict, and under the total policy the
// combined coloring must dominate the true chromatic number.
inline ClaimVerdict check_L3(const Graph& g, const Decomposition& d, const CheckOptions& opts = {}) {
    ClaimVerdict v;
    v.claim_id = "L3";
    v.instances = 1;
    ValidationReport rep = validate_decomposition(g, d);
    std::string failing;
    for (const auto& c : rep.checks)
        if (c.core && !c.pass) {
            failing = c.name + ": " + c.diagnostic;
            break;
        }
    if (failing.empty()) {
        v.status = ClaimStatus::holds;
    } else {
        v.status = ClaimStatus::violated;
        v.witness = ClaimWitness{g, std::nullopt, d, failing};
    }

    ClaimVerdict replay;
    replay.claim_id = "C2.3";
    replay.instances = 1;
    const ValidationCheck* rc = rep.find("trace-replay");
    if (rc && rc->pass) {
        replay.status = ClaimStatus::holds;
    } else {
        replay.status = ClaimStatus::violated;
        replay.witness = ClaimWitness{g, std::nullopt, d, rc ? rc->diagnostic : "trace replay check missing"};
    }
    v.subclaims.push_back(std::move(replay));

    if (d.config.residual == ResidualPolicy::process_all) {
        ClaimVerdict bound;
        bound.claim_id = "L3.chi-bound";
        bound.instances = 1;
        try {
            int chi = detail::cached_chi(g, opts);
            long long cap = static_cast<long long>(d.config.capacity) * d.assignment.plane_count;
            if (chi <= cap) {
                bound.status = ClaimStatus::holds;
            } else {
                bound.status = ClaimStatus::violated;
                bound.witness = ClaimWitness{g, std::nullopt, d,
                                             "chromatic number " + std::to_string(chi) + " exceeds capacity*planes = " +
                                                 std::to_string(cap)};
            }
        } catch (const std::runtime_error& e) {
            bound.status = ClaimStatus::inconclusive;
            bound.note = e.what();
        }
        v.subclaims.push_back(std::move(bound));
    }
    return v;
}

// When a plane absorbed a cut of its steering component whose sides are both
// stronger (in minor order) than the plane's color count, the residual left
// behind must have split. Also audits that every component choice in the
// trace really picked the strongest component.
inline ClaimVerdict check_C31(const Graph& g, const Decomposition& d, const CheckOptions& opts = {}) {
    ClaimVerdict v;
    v.claim_id = "C3.1";
    v.status = ClaimStatus::holds;
    try {
        for (const IterationRecord& rec : d.trace) {
            std::vector<char> placed(static_cast<std::size_t>(g.n), 0);
            for (int u : rec.seed_set) placed[static_cast<std::size_t>(u)] = 1;
            for (auto [u, c] : rec.placements) placed[static_cast<std::size_t>(u)] = 1;
            int plane_chi = plane_chromatic_number(d.assignment, rec.plane);
            InducedSubgraph sub = induced_subgraph(g, rec.subg);
            bool triggered = false;
            auto strong_sides = [&](const Graph& pruned, int needed) {
                int strong = 0;
                for (const VertexSet& comp_local : connected_components(pruned)) {
                    VertexSet host;
                    for (int x : comp_local) host.push_back(rec.subg[static_cast<std::size_t>(x)]);
                    if (hadwiger_number(induced_subgraph(g, host).graph, opts.minor) > plane_chi) ++strong;
                }
                return strong >= needed;
            };
            for (int local = 0; local < sub.graph.n && !triggered; ++local) {
                if (!placed[static_cast<std::size_t>(rec.subg[static_cast<std::size_t>(local)])]) continue;
                VertexSet others;
                for (int x = 0; x < sub.graph.n; ++x)
                    if (x != local) others.push_back(x);
                if (others.empty()) continue;
                Graph pruned = induced_subgraph(sub.graph, others).graph;
                // relabel: pruned vertex i corresponds to others[i] in sub ids
                if (!is_connected(pruned)) {
                    std::vector<VertexSet> comps = connected_components(pruned);
                    int strong = 0;
                    for (const VertexSet& comp : comps) {
                        VertexSet host;
                        for (int x : comp)
                            host.push_back(rec.subg[static_cast<std::size_t>(others[static_cast<std::size_t>(x)])]);
                        if (hadwiger_number(induced_subgraph(g, host).graph, opts.minor) > plane_chi) ++strong;
                    }
                    if (strong >= 2) triggered = true;
                }
            }
            for (auto [a, b] : sub.graph.edges()) {
                if (triggered) break;
                int ha = rec.subg[static_cast<std::size_t>(a)];
                int hb = rec.subg[static_cast<std::size_t>(b)];
                if (!placed[static_cast<std::size_t>(ha)] || !placed[static_cast<std::size_t>(hb)]) continue;
                Graph cut = without_edge(sub.graph, a, b);
                if (is_connected(cut)) continue;
                if (strong_sides(cut, 2)) triggered = true;
            }
            if (!triggered) continue;
            ++v.instances;
            if (rec.residual_components.size() < 2) {
                v.status = ClaimStatus::violated;
                v.witness = ClaimWitness{g, std::nullopt, d,
                                         "plane " + std::to_string(rec.plane) +
                                             " absorbed a strong cut, yet the residual had " +
                                             std::to_string(rec.residual_components.size()) + " component(s)"};
                break;
            }
        }
        if (v.status == ClaimStatus::holds && v.instances == 0) v.note = "no qualifying cuts; holds vacuously";
    } catch (const OracleLimitError& e) {
        v.status = ClaimStatus::inconclusive;
        v.note = e.what();
    }

    // selection audit: components were ranked honestly and the strongest one
    // steered every iteration
    ClaimVerdict audit;
    audit.claim_id = "C3.2";
    audit.instances = static_cast<long long>(d.trace.size());
    try {
        auto ranked_ok = [&](const std::vector<ResidualComponent>& recorded, const VertexSet& pool) {
            std::vector<ResidualComponent> expect = ranked_components(g, pool, opts.minor);
            if (expect.size() != recorded.size()) return false;
            for (std::size_t i = 0; i < expect.size(); ++i)
                if (expect[i].vertices != recorded[i].vertices || expect[i].hadwiger != recorded[i].hadwiger)
                    return false;
            return true;
        };
        bool ok = true;
        std::string why;
        VertexSet everything;
        for (int u = 0; u < g.n; ++u) everything.push_back(u);
        if (g.n > 0 && !ranked_ok(d.initial_components, everything)) {
            ok = false;
            why = "initial component ranking is not reproducible";
        }
        if (ok && g.n > 0 &&
            (d.initial_components.empty() || d.chosen_initial != d.initial_components.front().vertices)) {
            ok = false;
            why = "initial choice is not the strongest component";
        }
        std::vector<char> gone(static_cast<std::size_t>(g.n), 0);
        if (d.config.residual == ResidualPolicy::discard_paper)
            for (std::size_t i = 1; i < d.initial_components.size(); ++i)
                for (int u : d.initial_components[i].vertices) gone[static_cast<std::size_t>(u)] = 1;
        for (std::size_t r = 0; ok && r < d.trace.size(); ++r) {
            const IterationRecord& rec = d.trace[r];
            const VertexSet expected_subg = r == 0 ? d.chosen_initial
                                                   : d.trace[r - 1].chosen_next.value_or(VertexSet{});
            if (rec.subg != expected_subg) {
                ok = false;
                why = "iteration " + std::to_string(r) + " did not continue with the chosen component";
                break;
            }
            for (int u : rec.seed_set) gone[static_cast<std::size_t>(u)] = 1;
            for (auto [u, c] : rec.placements) gone[static_cast<std::size_t>(u)] = 1;
            VertexSet rest;
            for (int u = 0; u < g.n; ++u)
                if (!gone[static_cast<std::size_t>(u)]) rest.push_back(u);
            if (rest.empty() != rec.residual_components.empty()) {
                ok = false;
                why = "iteration " + std::to_string(r) + " misrecorded its residual";
                break;
            }
            if (!rest.empty()) {
                if (!ranked_ok(rec.residual_components, rest)) {
                    ok = false;
                    why = "iteration " + std::to_string(r) + " residual ranking is not reproducible";
                    break;
                }
                if (!rec.chosen_next || *rec.chosen_next != rec.residual_components.front().vertices) {
                    ok = false;
                    why = "iteration " + std::to_string(r) + " did not choose the strongest residual component";
                    break;
                }
                if (d.config.residual == ResidualPolicy::discard_paper)
                    for (std::size_t i = 1; i < rec.residual_components.size(); ++i)
                        for (int u : rec.residual_components[i].vertices) gone[static_cast<std::size_t>(u)] = 1;
            } else if (rec.chosen_next) {
                ok = false;
                why = "iteration " + std::to_string(r) + " chose a component from an empty residual";
                break;
            }
        }
        if (ok) {
            audit.status = ClaimStatus::holds;
        } else {
            audit.status = ClaimStatus::violated;
            audit.witness = ClaimWitness{g, std::nullopt, d, why};
        }
    } catch (const OracleLimitError& e) {
        audit.status = ClaimStatus::inconclusive;
        audit.note = e.what();
    }
    v.subclaims.push_back(std::move(audit));
    return v;
}

// The t=8 statement, split into testable parts. On graphs with chromatic
// number exactly 8: (a) a clique minor of order at least 8 exists, (b) the
// filling produces exactly two planes, (c) contracting both planes yields a
// complete graph on 8 vertices. Independently, (d) on graphs whose largest
// clique minor has order exactly 9 the chromatic number must stay at most 8.
inline ClaimVerdict check_T8(const Graph& g, const FillConfig& fill_cfg = {}, const CheckOptions& opts = {},
                             const Decomposition* precomputed = nullptr) {
    ClaimVerdict top;
    top.claim_id = "T8";
    ClaimVerdict a, b, c, dd;
    a.claim_id = "T8.a";
    b.claim_id = "T8.b";
    c.claim_id = "T8.c";
    dd.claim_id = "T8.d";

    std::optional<int> chi, h;
    std::string chi_note, h_note;
    try {
        chi = detail::cached_chi(g, opts);
    } catch (const std::runtime_error& e) {
        chi_note = e.what();
    }
    try {
        h = detail::cached_h(g, opts);
    } catch (const std::runtime_error& e) {
        h_note = e.what();
    }

    if (!chi) {
        a.note = b.note = c.note = "chromatic number unavailable: " + chi_note;
    } else if (*chi != 8) {
        a.note = b.note = c.note = "chromatic number is " + std::to_string(*chi) + ", not 8";
    } else {
        a.instances = 1;
        if (!h) {
            a.note = "minor oracle unavailable: " + h_note;
        } else if (*h >= 8) {
            a.status = ClaimStatus::holds;
            a.note = "largest clique minor has order " + std::to_string(*h);
        } else {
            a.status = ClaimStatus::violated;
            a.witness = ClaimWitness{g, std::nullopt, std::nullopt,
                                     "chromatic number 8 but largest clique minor has order " + std::to_string(*h)};
        }
        try {
            Decomposition local;
            const Decomposition* dp = precomputed;
            if (!dp) {
                local = chromatic_fill(g, fill_cfg);
                dp = &local;
            }
            b.instances = 1;
            if (dp->assignment.plane_count == 2) {
                b.status = ClaimStatus::holds;
            } else {
                b.status = ClaimStatus::violated;
                b.witness = ClaimWitness{g, std::nullopt, *dp,
                                         "filling produced " + std::to_string(dp->assignment.plane_count) +
                                             " planes instead of 2"};
            }
            ClaimVerdict comp = check_completeness(g, *dp, opts);
            c.instances = 1;
            c.status = comp.status;
            c.note = comp.note;
            c.witness = comp.witness;
            if (c.status == ClaimStatus::holds) {
                // the complete graph must land on exactly 8 vertices; with
                // every plane connected, each plane contributes exactly its
                // own minor order
                long long minors = 0;
                for (int p = 0; p < dp->assignment.plane_count; ++p)
                    minors += hadwiger_number(induced_subgraph(g, dp->assignment.plane_vertices(p)).graph,
                                              opts.minor);
                if (minors != 8) {
                    c.status = ClaimStatus::violated;
                    c.witness = ClaimWitness{g, std::nullopt, *dp,
                                             "contraction completed on " + std::to_string(minors) +
                                                 " minor vertices instead of 8"};
                }
            }
        } catch (const std::exception& e) {
            b.note = c.note = e.what();
        }
    }

    if (!h) {
        dd.note = "minor oracle unavailable: " + h_note;
    } else if (*h != 9) {
        dd.note = "largest clique minor has order " + std::to_string(*h) + ", converse applies to order 9";
    } else {
        dd.instances = 1;
        if (!chi) {
            dd.status = ClaimStatus::inconclusive;
            dd.note = "chromatic number unavailable: " + chi_note;
        } else if (*chi <= 8) {
            dd.status = ClaimStatus::holds;
        } else {
            dd.status = ClaimStatus::violated;
            dd.witness = ClaimWitness{g, std::nullopt, std::nullopt,
                                      "largest clique minor has order 9 but chromatic number is " +
                                          std::to_string(*chi)};
        }
    }

    int evaluated = 0, held = 0, broken = 0;
    for (const ClaimVerdict* s : {&a, &b, &c, &dd}) {
        if (s->status == ClaimStatus::inconclusive) continue;
        ++evaluated;
        (s->status == ClaimStatus::holds ? held : broken) += 1;
    }
    top.instances = evaluated;
    if (broken > 0) {
        top.status = ClaimStatus::violated;
        for (const ClaimVerdict* s : {&a, &b, &c, &dd})
            if (s->status == ClaimStatus::violated && s->witness) {
                top.witness = s->witness;
                break;
            }
    } else if (evaluated > 0) {
        top.status = ClaimStatus::holds;
    } else {
        top.status = ClaimStatus::inconclusive;
        top.note = "preconditions unmet: " + a.note;
    }
    top.subclaims = {std::move(a), std::move(b), std::move(c), std::move(dd)};
    return top;
}

namespace detail {

inline const ClaimVerdict* find_claim(const ClaimVerdict& root, const std::string& id) {
    if (root.claim_id == id) return &root;
    for (const ClaimVerdict& s : root.subclaims)
        if (const ClaimVerdict* hit = find_claim(s, id)) return hit;
    return nullptr;
}

}  // namespace detail

// Re-run the check that produced a violated verdict on its own witness; a
// sound violation reproduces itself.
inline ClaimStatus reverify_violation(const ClaimVerdict& v, const CheckOptions& opts = {}) {
    if (!v.witness) return ClaimStatus::inconclusive;
    const ClaimWitness& w = *v.witness;
    CheckOptions fresh{opts.minor, opts.coloring, std::nullopt, std::nullopt};
    const std::string& id = v.claim_id;
    auto from = [&](const ClaimVerdict& rerun) {
        const ClaimVerdict* node = detail::find_claim(rerun, id);
        return node ? node->status : ClaimStatus::inconclusive;
    };
    if (id == "FIG1") return check_fig1(fresh).status;
    if (id == "C2.6") {
        if (!w.graph || !w.graph_b) return ClaimStatus::inconclusive;
        return check_C26({*w.graph, *w.graph_b}, fresh).status;
    }
    if (!w.graph) return ClaimStatus::inconclusive;
    if (id.rfind("T8", 0) == 0) {
        FillConfig cfg = w.decomposition ? w.decomposition->config : FillConfig{};
        return from(check_T8(*w.graph, cfg, fresh, w.decomposition ? &*w.decomposition : nullptr));
    }
    if (!w.decomposition) return ClaimStatus::inconclusive;
    if (id == "L1") return from(check_L1(*w.graph, *w.decomposition, fresh));
    if (id == "C2.1") return from(check_classification(*w.graph, *w.decomposition));
    if (id == "C2.2" || id == "C2.4" || id == "C2.5" || id == "C3.3")
        return from(check_completeness(*w.graph, *w.decomposition, fresh));
    if (id == "L3" || id == "C2.3" || id.rfind("L3.", 0) == 0)
        return from(check_L3(*w.graph, *w.decomposition, fresh));
    if (id == "C3.1" || id == "C3.2") return from(check_C31(*w.graph, *w.decomposition, fresh));
    return ClaimStatus::inconclusive;
}

// Runs every per-graph check under one fill configuration; the corpus-level
// pair claim is not included (it needs more than one graph).
inline std::vector<ClaimVerdict> run_all_checks(const Graph& g, const FillConfig& fill_cfg = {},
                                                CheckOptions opts = {}) {
    std::vector<ClaimVerdict> out;
    out.push_back(check_fig1(opts));
    try {
        if (!opts.chi) opts.chi = detail::cached_chi(g, opts);
    } catch (const std::runtime_error&) {
    }
    try {
        if (!opts.h) opts.h = detail::cached_h(g, opts);
    } catch (const std::runtime_error&) {
    }
    try {
        Decomposition d = chromatic_fill(g, fill_cfg);
        out.push_back(check_L1(g, d, opts));
        out.push_back(check_classification(g, d));
        out.push_back(check_completeness(g, d, opts));
        out.push_back(check_L3(g, d, opts));
        out.push_back(check_C31(g, d, opts));
        out.push_back(check_T8(g, fill_cfg, opts, &d));
    } catch (const std::exception& e) {
        for (const char* id : {"L1", "C2.1", "C2.5", "L3", "C3.1", "T8"}) {
            ClaimVerdict v;
            v.claim_id = id;
            v.status = ClaimStatus::inconclusive;
            v.note = std::string("filling failed: ") + e.what();
            out.push_back(std::move(v));
        }
    }
    return out;
}

struct FuzzConfig {
    std::uint64_t seed = 1;
    int count = 100;
    int n_min = 5;
    int n_max = 9;
    std::vector<double> probabilities = {0.3, 0.5, 0.7};
    bool structured_mix = true;         // every 5th instance comes from the fixed pool
    std::vector<FillConfig> combos;     // empty: full placement x residual grid
    int jobs = 1;
    MinorOptions minor;
    ColoringOptions coloring;
};

struct ClaimCounts {
    long long holds = 0;
    long long violated = 0;
    long long inconclusive = 0;
};

struct ComboReport {
    FillConfig config;
    std::map<std::string, ClaimCounts> claims;
    std::vector<ClaimVerdict> violations;
};

struct ReportSet {
    std::uint64_t seed = 0;
    long long instances = 0;
    std::map<std::string, ClaimCounts> corpus_claims;   // combo-independent claims
    std::vector<ClaimVerdict> corpus_violations;
    std::vector<ComboReport> combos;
    std::vector<std::string> errors;

    bool any_violation() const {
        if (!corpus_violations.empty()) return true;
        for (const ComboReport& c : combos)
            if (!c.violations.empty()) return true;
        return false;
    }
    bool any_error() const { return !errors.empty(); }
};

inline std::vector<std::pair<std::string, Graph>> fuzz_structured_pool() {
    Graph cut_k4 = from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                      {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    Graph apex_pendant = from_edge_list(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
    return {
        {"complete:8", complete(8)},
        {"join(cycle:5,complete:5)", join(cycle(5), complete(5))},
        {"petersen", petersen()},
        {"mycielski:2", mycielski_iterate(2)},
        {"subdivided:4", subdivided_complete(4)},
        {"gadget:cutk4", cut_k4},
        {"gadget:apex", apex_pendant},
        {"cycle:5", cycle(5)},
        {"complete:9", complete(9)},
        {"path:6", path(6)},
    };
}

namespace detail {

struct FuzzInstance {
    std::string label;
    Graph graph;
};

inline FuzzInstance fuzz_make_instance(const FuzzConfig& cfg, int index,
                                       const std::vector<std::pair<std::string, Graph>>& pool) {
    if (cfg.structured_mix && !pool.empty() && index % 5 == 0) {
        const auto& entry = pool[static_cast<std::size_t>(index / 5) % pool.size()];
        return {entry.first, entry.second};
    }
    SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    int n = cfg.n_min + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cfg.n_max - cfg.n_min + 1)));
    double p = cfg.probabilities[static_cast<std::size_t>(
        rng.next_below(static_cast<std::uint64_t>(cfg.probabilities.size())))];
    std::uint64_t gseed = rng.next();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "er:n=%d,p=%g", n, p);
    return {buf, erdos_renyi(n, p, gseed)};
}

struct FuzzOutcome {
    std::string label;
    Graph graph;
    std::optional<std::pair<int, int>> chi_h;
    std::vector<std::vector<ClaimVerdict>> per_combo;
    std::vector<std::string> errors;
};

inline FuzzOutcome fuzz_run_instance(const FuzzConfig& cfg, const std::vector<FillConfig>& combos,
                                     FuzzInstance inst) {
    FuzzOutcome out;
    out.label = std::move(inst.label);
    out.graph = std::move(inst.graph);
    CheckOptions base;
    base.minor = cfg.minor;
    base.coloring = cfg.coloring;
    std::optional<int> chi, h;
    try {
        chi = cached_chi(out.graph, base);
    } catch (const std::runtime_error& e) {
        out.errors.push_back(out.label + ": chromatic oracle: " + e.what());
    }
    try {
        h = cached_h(out.graph, base);
    } catch (const std::runtime_error& e) {
        out.errors.push_back(out.label + ": minor oracle: " + e.what());
    }
    base.chi = chi;
    base.h = h;
    if (chi && h) out.chi_h = std::make_pair(*chi, *h);

    for (const FillConfig& combo : combos) {
        std::vector<ClaimVerdict> verdicts;
        auto guarded = [&](const char* id, auto&& fn) {
            try {
                verdicts.push_back(fn());
            } catch (const std::exception& e) {
                ClaimVerdict v;
                v.claim_id = id;
                v.status = ClaimStatus::inconclusive;
                v.note = std::string("error: ") + e.what();
                out.errors.push_back(out.label + " [" + fill_combo_label(combo) + "] " + id + ": " + e.what());
                verdicts.push_back(std::move(v));
            }
        };
        try {
            Decomposition d = chromatic_fill(out.graph, combo);
            guarded("L1", [&] { return check_L1(out.graph, d, base); });
            guarded("C2.1", [&] { return check_classification(out.graph, d); });
            guarded("C2.5", [&] { return check_completeness(out.graph, d, base); });
            guarded("L3", [&] { return check_L3(out.graph, d, base); });
            guarded("C3.1", [&] { return check_C31(out.graph, d, base); });
            guarded("T8", [&] { return check_T8(out.graph, combo, base, &d); });
        } catch (const std::exception& e) {
            out.errors.push_back(out.label + " [" + fill_combo_label(combo) + "] filling: " + e.what());
            for (const char* id : {"L1", "C2.1", "C2.5", "L3", "C3.1", "T8"}) {
                ClaimVerdict v;
                v.claim_id = id;
                v.status = ClaimStatus::inconclusive;
                v.note = std::string("filling failed: ") + e.what();
                verdicts.push_back(std::move(v));
            }
        }
        out.per_combo.push_back(std::move(verdicts));
    }
    return out;
}

inline void tally_claim_tree(std::map<std::string, ClaimCounts>& counts, const ClaimVerdict& v) {
    ClaimCounts& c = counts[v.claim_id];
    switch (v.status) {
        case ClaimStatus::holds: ++c.holds; break;
        case ClaimStatus::violated: ++c.violated; break;
        default: ++c.inconclusive; break;
    }
    for (const ClaimVerdict& s : v.subclaims) tally_claim_tree(counts, s);
}

inline void collect_violations(std::vector<ClaimVerdict>& sink, const ClaimVerdict& v, const std::string& label) {
    if (v.status == ClaimStatus::violated) {
        ClaimVerdict copy = v;
        copy.note = copy.note.empty() ? ("instance " + label) : (copy.note + "; instance " + label);
        sink.push_back(std::move(copy));
        return;
    }
    for (const ClaimVerdict& s : v.subclaims) collect_violations(sink, s, label);
}

}  // namespace detail

inline std::vector<FillConfig> default_fill_grid(const MinorOptions& minor = {}, const ColoringOptions& coloring = {}) {
    std::vector<FillConfig> grid;
    for (PlacementMode m : {PlacementMode::capacity4, PlacementMode::strict_lemma2})
        for (ResidualPolicy r : {ResidualPolicy::process_all, ResidualPolicy::discard_paper}) {
            FillConfig c;
            c.placement = m;
            c.residual = r;
            c.minor = minor;
            c.coloring = coloring;
            grid.push_back(c);
        }
    return grid;
}

// Deterministic corpus sweep: instance i is derived from (seed, i) alone, so
// any job count produces the same ReportSet.
inline ReportSet fuzz(const FuzzConfig& cfg) {
    if (cfg.count < 0) throw std::invalid_argument("instance count must be nonnegative");
    if (cfg.n_min < 0 || cfg.n_min > cfg.n_max) throw std::invalid_argument("bad vertex count range");
    if (cfg.probabilities.empty()) throw std::invalid_argument("need at least one edge probability");
    for (double p : cfg.probabilities)
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
    if (cfg.jobs < 1) throw std::invalid_argument("job count must be at least 1");

    std::vector<FillConfig> combos = cfg.combos.empty() ? default_fill_grid(cfg.minor, cfg.coloring) : cfg.combos;
    const auto pool = fuzz_structured_pool();

    std::vector<detail::FuzzOutcome> outcomes(static_cast<std::size_t>(cfg.count));
    auto work = [&](int i) {
        outcomes[static_cast<std::size_t>(i)] =
            detail::fuzz_run_instance(cfg, combos, detail::fuzz_make_instance(cfg, i, pool));
    };
    if (cfg.jobs == 1 || cfg.count <= 1) {
        for (int i = 0; i < cfg.count; ++i) work(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        int threads = std::min(cfg.jobs, cfg.count);
        workers.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= cfg.count) return;
                    work(i);
                }
            });
        for (std::thread& t : workers) t.join();
    }

    ReportSet rs;
    rs.seed = cfg.seed;
    rs.instances = cfg.count;
    rs.combos.resize(combos.size());
    for (std::size_t c = 0; c < combos.size(); ++c) rs.combos[c].config = combos[c];

    if (cfg.count == 0) return rs;  // nothing sampled, nothing to conclude

    CheckOptions base;
    base.minor = cfg.minor;
    base.coloring = cfg.coloring;
    ClaimVerdict fig1 = check_fig1(base);
    detail::tally_claim_tree(rs.corpus_claims, fig1);
    detail::collect_violations(rs.corpus_violations, fig1, "fixed layout");

    for (int i = 0; i < cfg.count; ++i) {
        const detail::FuzzOutcome& out = outcomes[static_cast<std::size_t>(i)];
        std::string label = std::to_string(i) + " (" + out.label + ")";
        for (const std::string& e : out.errors) rs.errors.push_back(e);
        for (std::size_t c = 0; c < combos.size(); ++c) {
            if (c >= out.per_combo.size()) continue;
            for (const ClaimVerdict& v : out.per_combo[c]) {
                detail::tally_claim_tree(rs.combos[c].claims, v);
                detail::collect_violations(rs.combos[c].violations, v, label);
            }
        }
    }

    std::vector<Graph> corpus;
    std::vector<std::optional<std::pair<int, int>>> chi_h;
    for (const auto& out : outcomes) {
        corpus.push_back(out.graph);
        chi_h.push_back(out.chi_h);
    }
    ClaimVerdict pairwise = check_C26_values(corpus, chi_h);
    detail::tally_claim_tree(rs.corpus_claims, pairwise);
    detail::collect_violations(rs.corpus_violations, pairwise, "corpus pair sweep");
    return rs;
}

}  // namespace chroma
