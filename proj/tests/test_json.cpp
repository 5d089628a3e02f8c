#include <chroma/claims.hpp>
#include <chroma/generators.hpp>
#include <chroma/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace chroma;
using nlohmann::json;

TEST_CASE("graph serialization is byte-frozen") {
    json j = complete(3);
    CHECK(j.dump() == R"({"edges":[[0,1],[0,2],[1,2]],"n":3})");
    json empty = Graph(0);
    CHECK(empty.dump() == R"({"edges":[],"n":0})");
}

TEST_CASE("coloring and witness serialization") {
    json c = Coloring{3, {0, 1, 2}};
    CHECK(c.dump() == R"({"colors":[0,1,2],"k":3})");

    json w = MinorWitness{{{0, 1}, {2}}};
    CHECK(w.dump() == R"({"branch_sets":[[0,1],[2]],"t":2})");
}

TEST_CASE("assignment serialization lists planes with colored vertices") {
    Decomposition d = chromatic_fill(complete(5));
    json j = d.assignment;
    CHECK(j["capacity"] == 4);
    CHECK(j["plane_count"] == 2);
    REQUIRE(j["planes"].size() == 2);
    CHECK(j["planes"][0]["id"] == 0);
    CHECK(j["planes"][0]["vertices"].size() == 4);
    CHECK(j["planes"][0]["vertices"][0].dump() == R"({"color":0,"v":0})");
    CHECK(j["planes"][1]["vertices"][0].dump() == R"({"color":0,"v":4})");
}

TEST_CASE("decomposition documents form stable bytes") {
    Decomposition d = chromatic_fill(complete(5));
    json a = d, b = chromatic_fill(complete(5));
    CHECK(a.dump() == b.dump());
    for (const char* key : {"config", "assignment", "trace", "unplaced", "initial_components", "chosen_initial"})
        CHECK(a.contains(key));
    CHECK(a["config"]["placement"] == "capacity4");
    CHECK(a["config"]["residual"] == "process-all");
    CHECK(a["trace"][0]["chosen_next"] == json(VertexSet{4}));
    CHECK(a["trace"][1]["chosen_next"].is_null());

    FillConfig strict;
    strict.placement = PlacementMode::strict_lemma2;
    strict.residual = ResidualPolicy::discard_paper;
    json s = chromatic_fill(complete(5), strict);
    CHECK(s["config"]["placement"] == "strict-lemma2");
    CHECK(s["config"]["residual"] == "discard-paper");
}

TEST_CASE("claim verdicts serialize status names and nested subclaims") {
    ClaimVerdict v = check_T8(complete(9));
    json j = v;
    CHECK(j["claim"] == "T8");
    CHECK(j["status"] == "violated");
    REQUIRE(j["subclaims"].size() == 4);
    CHECK(j["subclaims"][3]["claim"] == "T8.d");
    CHECK(j["subclaims"][3]["status"] == "violated");
    CHECK(j["subclaims"][0]["status"] == "inconclusive");
    CHECK_FALSE(j["witness"].is_null());
    CHECK(j["witness"]["graph"]["n"] == 9);
    CHECK(j["witness"].contains("detail"));
    CHECK_FALSE(j["witness"].contains("decomposition"));

    json holds = check_fig1();
    CHECK(holds["status"] == "holds");
    CHECK(holds["witness"].is_null());
    CHECK(holds["instances"] == 4);
}

TEST_CASE("validation reports serialize each named check") {
    Graph g = complete(8);
    Decomposition d = chromatic_fill(g);
    json j = validate_decomposition(g, d);
    CHECK(j["all_core_pass"] == true);
    bool saw_replay = false;
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("core"));
        CHECK(c.contains("pass"));
        if (c["name"] == "trace-replay") saw_replay = true;
    }
    CHECK(saw_replay);
}

TEST_CASE("report sets keep seeds exact at 64 bits") {
    FuzzConfig cfg;
    cfg.seed = 18446744073709551615ull;
    cfg.count = 0;
    json j = fuzz(cfg);
    CHECK(j["seed"] == 18446744073709551615ull);
    CHECK(j["instances"] == 0);
    CHECK(j["combos"].size() == 4);
    CHECK(j["corpus_claims"].dump() == "{}");
    CHECK(j["errors"].dump() == "[]");
}

TEST_CASE("fuzz report documents round-trip their tallies") {
    FuzzConfig cfg;
    cfg.seed = 5;
    cfg.count = 8;
    ReportSet rs = fuzz(cfg);
    json j = rs;
    long long holds = 0, violated = 0, inconclusive = 0;
    for (const auto& [id, c] : rs.combos[0].claims) {
        holds += c.holds;
        violated += c.violated;
        inconclusive += c.inconclusive;
    }
    long long json_total = 0;
    for (const auto& [id, c] : j["combos"][0]["claims"].items())
        json_total += c["holds"].get<long long>() + c["violated"].get<long long>() +
                      c["inconclusive"].get<long long>();
    CHECK(json_total == holds + violated + inconclusive);
    CHECK(j["combos"][0]["config"]["capacity"] == 4);
}
