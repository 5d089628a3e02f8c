#pragma once

#include "claims.hpp"

#include <nlohmann/json.hpp>

// Writers only: the library's artifacts (graphs, decompositions, verdicts,
// fuzz reports) serialize to JSON with alphabetically ordered keys, so equal
// values always produce byte-equal documents.

namespace chroma {

inline void to_json(nlohmann::json& j, const Graph& g) {
    j = nlohmann::json{{"n", g.n}, {"edges", nlohmann::json::array()}};
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
}

inline void to_json(nlohmann::json& j, const Coloring& c) {
    j = nlohmann::json{{"k", c.k}, {"colors", c.color}};
}

inline void to_json(nlohmann::json& j, const MinorWitness& w) {
    j = nlohmann::json{{"t", w.t()}, {"branch_sets", w.branch_sets}};
}

inline void to_json(nlohmann::json& j, const PlaneAssignment& a) {
    j = nlohmann::json{{"capacity", a.capacity}, {"plane_count", a.plane_count}, {"planes", nlohmann::json::array()}};
    for (int p = 0; p < a.plane_count; ++p) {
        nlohmann::json plane{{"id", p}, {"vertices", nlohmann::json::array()}};
        for (int v : a.plane_vertices(p))
            plane["vertices"].push_back({{"v", v}, {"color", a.color_of[static_cast<std::size_t>(v)]}});
        j["planes"].push_back(std::move(plane));
    }
}

inline void to_json(nlohmann::json& j, const MinorOptions& o) {
    j = nlohmann::json{{"vertex_ceiling", o.vertex_ceiling}};
}

inline void to_json(nlohmann::json& j, const ColoringOptions& o) {
    j = nlohmann::json{{"node_budget", o.node_budget}};
}

inline void to_json(nlohmann::json& j, const FillConfig& c) {
    j = nlohmann::json{{"capacity", c.capacity},
                       {"placement", placement_mode_name(c.placement)},
                       {"residual", residual_policy_name(c.residual)},
                       {"minor", c.minor},
                       {"coloring", c.coloring}};
}

inline void to_json(nlohmann::json& j, const ResidualComponent& r) {
    j = nlohmann::json{{"vertices", r.vertices}, {"hadwiger", r.hadwiger}};
}

inline void to_json(nlohmann::json& j, const IterationRecord& r) {
    j = nlohmann::json{{"plane", r.plane},
                       {"subg", r.subg},
                       {"seed_set", r.seed_set},
                       {"seed_colors", r.seed_colors},
                       {"placements", nlohmann::json::array()},
                       {"connected_at_close", r.connected_at_close},
                       {"residual_components", r.residual_components},
                       {"chosen_next", nullptr},
                       {"discarded", r.discarded}};
    for (auto [v, c] : r.placements) j["placements"].push_back({v, c});
    if (r.chosen_next) j["chosen_next"] = *r.chosen_next;
}

inline void to_json(nlohmann::json& j, const Decomposition& d) {
    j = nlohmann::json{{"config", d.config},
                       {"assignment", d.assignment},
                       {"trace", d.trace},
                       {"unplaced", d.unplaced},
                       {"initial_components", d.initial_components},
                       {"chosen_initial", d.chosen_initial}};
}

inline void to_json(nlohmann::json& j, const ValidationCheck& c) {
    j = nlohmann::json{{"name", c.name}, {"core", c.core}, {"pass", c.pass}, {"diagnostic", c.diagnostic}};
}

inline void to_json(nlohmann::json& j, const ValidationReport& r) {
    j = nlohmann::json{{"checks", r.checks}, {"all_core_pass", r.all_core_pass()}};
}

inline void to_json(nlohmann::json& j, const ClaimWitness& w) {
    j = nlohmann::json::object();
    if (w.graph) j["graph"] = *w.graph;
    if (w.graph_b) j["graph_b"] = *w.graph_b;
    if (w.decomposition) j["decomposition"] = *w.decomposition;
    j["detail"] = w.detail;
}

inline void to_json(nlohmann::json& j, const ClaimVerdict& v) {
    j = nlohmann::json{{"claim", v.claim_id},
                       {"status", claim_status_name(v.status)},
                       {"instances", v.instances},
                       {"note", v.note},
                       {"witness", nullptr},
                       {"subclaims", v.subclaims}};
    if (v.witness) j["witness"] = *v.witness;
}

inline void to_json(nlohmann::json& j, const ClaimCounts& c) {
    j = nlohmann::json{{"holds", c.holds}, {"violated", c.violated}, {"inconclusive", c.inconclusive}};
}

inline void to_json(nlohmann::json& j, const ComboReport& c) {
    j = nlohmann::json{{"config", c.config}, {"claims", c.claims}, {"violations", c.violations}};
}

inline void to_json(nlohmann::json& j, const ReportSet& r) {
    j = nlohmann::json{{"seed", r.seed},
                       {"instances", r.instances},
                       {"corpus_claims", r.corpus_claims},
                       {"corpus_violations", r.corpus_violations},
                       {"combos", r.combos},
                       {"errors", r.errors}};
}

}  // namespace chroma
