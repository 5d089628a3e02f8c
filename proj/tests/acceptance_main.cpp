// Acceptance gate: nine numbered checks, one PASS/FAIL line each. The first
// argument is the path to the chroma-planes binary (checks 1, 2, and 8 drive
// the executable; the rest call the library directly). Exit status is the
// number of failed checks.

#include <chroma/claims.hpp>
#include <chroma/json_io.hpp>

#include "support/naive.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chroma;
using Clock = std::chrono::steady_clock;

std::string g_binary;

struct Corpora {
    std::vector<Graph> chi_corpus;    // check 3: exhaustive n<=6 plus 500 random
    std::vector<int> chi_values;
    std::vector<Graph> minor_corpus;  // check 4: 500 random n<=7 plus named graphs
    std::vector<int> h_values;
    std::vector<Graph> fill_corpus;   // check 5: 1000 random n<=12
    std::vector<Decomposition> fills;
    std::vector<int> fill_chi;
    std::vector<int> fill_h;          // populated by check 6
};

Corpora g_corpora;

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& why) {
        if (ok) return;
        if (!pass) detail << "; ";
        pass = false;
        detail << why;
    }
};

int run_cli(const std::string& args, std::string* stdout_text) {
    std::string capture = "/tmp/chroma_accept_stdout.txt";
    std::string cmd = "\"" + g_binary + "\" " + args + " > " + capture + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    if (stdout_text) {
        std::ifstream in(capture, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        *stdout_text = buf.str();
    }
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long long count_substr(const std::string& hay, const std::string& needle) {
    long long k = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++k;
    return k;
}

// 1: the two-plane K5 layout has a clique minor on all 5 vertices and loses
// it when any one of the 4 cross edges goes away.
Line check1() {
    Line r;
    std::string out;
    int rc = run_cli("check --claim FIG1", &out);
    r.require(rc == 0, "exit code " + std::to_string(rc));
    r.require(out.find("holds") != std::string::npos, "verdict line lacks holds");
    ClaimVerdict v = check_fig1();
    r.require(v.status == ClaimStatus::holds, "library verdict is " + std::string(claim_status_name(v.status)));
    r.require(v.instances == 4, "expected 4 edge deletions, saw " + std::to_string(v.instances));
    r.detail << "4 cross-edge deletions each drop the minor order to 4";
    return r;
}

// 2: filling the complete graph on 8 vertices gives two planes of four, and
// contracting both planes leaves a complete graph.
Line check2() {
    Line r;
    std::string out;
    int rc = run_cli("decompose --gen complete:8", &out);
    r.require(rc == 0, "exit code " + std::to_string(rc));
    r.require(out.find("planes: 2") != std::string::npos, "stdout lacks 'planes: 2'");
    r.require(count_substr(out, "4 vertices") == 2, "expected two planes of 4 vertices");
    Graph g = complete(8);
    Decomposition d = chromatic_fill(g);
    r.require(d.assignment.plane_count == 2, "plane count " + std::to_string(d.assignment.plane_count));
    for (int p = 0; p < d.assignment.plane_count; ++p)
        r.require(d.assignment.plane_vertices(p).size() == 4, "plane size off");
    ClaimVerdict comp = check_completeness(g, d);
    r.require(comp.status == ClaimStatus::holds,
              "completeness verdict is " + std::string(claim_status_name(comp.status)));
    r.detail << "2 planes of 4, contraction yields a complete graph on 8 vertices";
    return r;
}

// 3: the exact coloring search agrees with brute-force k^n enumeration on
// every graph with at most 6 vertices up to isomorphism and on 500 seeded
// random graphs.
Line check3() {
    Line r;
    long long iso = 0, rnd = 0, bad = 0;
    auto compare = [&](const Graph& g) {
        ChromaticResult got = chromatic_number(g);
        int want = naive::chromatic_number(g);
        if (got.outcome != SearchOutcome::found || got.value != want) ++bad;
        g_corpora.chi_corpus.push_back(g);
        g_corpora.chi_values.push_back(want);
    };
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : naive::all_graphs_up_to_iso(n)) {
            compare(g);
            ++iso;
        }
    const double probs[5] = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (int i = 0; i < 500; ++i) {
        Graph g = erdos_renyi(1 + i % 6, probs[i % 5], derive_seed(1001, static_cast<std::uint64_t>(i)));
        compare(g);
        ++rnd;
    }
    r.require(bad == 0, std::to_string(bad) + " disagreement(s) with the brute-force oracle");
    r.detail << iso << " graphs up to isomorphism + " << rnd << " random, zero disagreements";
    return r;
}

// 4: the exact minor search agrees with brute-force partition enumeration on
// 500 seeded random graphs with at most 7 vertices; complete graphs score
// their own order; the Petersen values are recomputed from scratch.
Line check4() {
    Line r;
    long long bad = 0;
    const double probs[5] = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (int i = 0; i < 500; ++i) {
        Graph g = erdos_renyi(1 + i % 7, probs[i % 5], derive_seed(1002, static_cast<std::uint64_t>(i)));
        int got = hadwiger_number(g);
        if (got != naive::hadwiger_number(g)) ++bad;
        g_corpora.minor_corpus.push_back(g);
        g_corpora.h_values.push_back(got);
    }
    r.require(bad == 0, std::to_string(bad) + " disagreement(s) with the brute-force oracle");
    for (int n = 1; n <= 8; ++n) {
        Graph g = complete(n);
        int got = hadwiger_number(g);
        r.require(got == n, "complete graph on " + std::to_string(n) + " vertices scored " + std::to_string(got));
        g_corpora.minor_corpus.push_back(g);
        g_corpora.h_values.push_back(got);
    }
    Graph pet = petersen();
    int h_pet = hadwiger_number(pet);
    // Cross-checks that pin the recomputed value: a minor on 6 vertices
    // needs 15 pairwise cross edges, which is the whole edge supply, so all
    // branch sets would be singletons and the host would contain a complete
    // graph on 6 vertices; that needs degree 5 in a 3-regular graph.
    r.require(pet.edge_count() == 15, "petersen edge count off");
    bool cubic = true;
    for (int v = 0; v < pet.n; ++v) cubic = cubic && pet.adj[static_cast<std::size_t>(v)].size() == 3;
    r.require(cubic, "petersen is not 3-regular");
    r.require(h_pet == 5, "recomputed petersen minor order is " + std::to_string(h_pet));
    auto w5 = has_clique_minor(pet, 5);
    r.require(w5.has_value() && verify_minor_witness(pet, *w5), "order-5 witness missing or invalid");
    ChromaticResult chi_pet = chromatic_number(pet);
    r.require(chi_pet.outcome == SearchOutcome::found && chi_pet.value == 3,
              "petersen chromatic number " + std::to_string(chi_pet.value));
    r.require(naive::chromatic_number(pet) == 3, "brute-force petersen chromatic number off");
    g_corpora.minor_corpus.push_back(pet);
    g_corpora.h_values.push_back(h_pet);
    r.detail << "500 random graphs agree; complete graphs 1..8 score their order; "
             << "petersen recomputed: minor order 5, chromatic number 3";
    return r;
}

// 5: on 1000 seeded random graphs every core validation check passes and the
// combined coloring keeps the chromatic number within 4 colors per plane.
Line check5() {
    Line r;
    const double probs[4] = {0.2, 0.4, 0.6, 0.8};
    long long bad_valid = 0, bad_bound = 0;
    for (int i = 0; i < 1000; ++i) {
        Graph g = erdos_renyi(3 + i % 10, probs[i % 4], derive_seed(1003, static_cast<std::uint64_t>(i)));
        Decomposition d = chromatic_fill(g);
        ValidationReport rep = validate_decomposition(g, d);
        if (!rep.all_core_pass()) ++bad_valid;
        ChromaticResult chi = chromatic_number(g);
        if (chi.outcome != SearchOutcome::found || chi.value > 4 * d.assignment.plane_count) ++bad_bound;
        g_corpora.fill_corpus.push_back(g);
        g_corpora.fills.push_back(std::move(d));
        g_corpora.fill_chi.push_back(chi.value);
    }
    r.require(bad_valid == 0, std::to_string(bad_valid) + " instance(s) failed core validation");
    r.require(bad_bound == 0, std::to_string(bad_bound) + " instance(s) broke the 4-per-plane bound");
    r.detail << "1000 instances: core validation clean, chromatic number within 4 colors per plane";
    return r;
}

// 6: the chromatic number never exceeds the largest clique-minor order on
// any instance the earlier checks touched.
Line check6() {
    Line r;
    long long instances = 0, bad = 0;
    for (std::size_t i = 0; i < g_corpora.chi_corpus.size(); ++i) {
        if (g_corpora.chi_values[i] > hadwiger_number(g_corpora.chi_corpus[i])) ++bad;
        ++instances;
    }
    for (std::size_t i = 0; i < g_corpora.minor_corpus.size(); ++i) {
        ChromaticResult chi = chromatic_number(g_corpora.minor_corpus[i]);
        if (chi.outcome != SearchOutcome::found || chi.value > g_corpora.h_values[i]) ++bad;
        ++instances;
    }
    for (std::size_t i = 0; i < g_corpora.fill_corpus.size(); ++i) {
        int h = hadwiger_number(g_corpora.fill_corpus[i]);
        g_corpora.fill_h.push_back(h);
        if (g_corpora.fill_chi[i] > h) ++bad;
        ++instances;
    }
    r.require(bad == 0, std::to_string(bad) + " instance(s) with chromatic number above the minor order");
    r.detail << instances << " corpus instances, chromatic number <= largest clique-minor order on all";
    return r;
}

// 7: the join of a 5-cycle and a complete graph on 5 vertices has chromatic
// number 8 and clique-minor order 8; the order-8 verdicts are recorded under
// all four config combinations and reproduce bit-identically.
Line check7() {
    Line r;
    Graph g = join(cycle(5), complete(5));
    ChromaticResult chi = chromatic_number(g);
    r.require(chi.outcome == SearchOutcome::found && chi.value == 8,
              "chromatic number " + std::to_string(chi.value));
    int h = hadwiger_number(g);
    r.require(h == 8, "largest clique-minor order " + std::to_string(h));
    for (const FillConfig& combo : default_fill_grid()) {
        ClaimVerdict first = check_T8(g, combo, CheckOptions{});
        ClaimVerdict second = check_T8(g, combo, CheckOptions{});
        nlohmann::json ja = first, jb = second;
        std::string label = fill_combo_label(combo);
        r.require(ja.dump() == jb.dump(), label + ": two runs differ");
        r.require(first.subclaims.size() == 4, label + ": subclaim list off");
        const ClaimVerdict& a = first.subclaims[0];
        const ClaimVerdict& b = first.subclaims[1];
        const ClaimVerdict& c = first.subclaims[2];
        r.require(a.status == ClaimStatus::holds, label + ": order lower bound verdict is " +
                                                      std::string(claim_status_name(a.status)));
        auto recorded = [](const ClaimVerdict& v) {
            return v.status == ClaimStatus::holds || v.status == ClaimStatus::violated;
        };
        r.require(recorded(b) && recorded(c), label + ": plane verdicts not recorded");
        for (const ClaimVerdict& sub : first.subclaims)
            if (sub.status == ClaimStatus::violated) {
                r.require(sub.witness.has_value(), label + ": violated " + sub.claim_id + " lacks a witness");
                r.require(reverify_violation(sub) == ClaimStatus::violated,
                          label + ": violated " + sub.claim_id + " does not re-verify");
            }
        r.detail << label << " [b=" << claim_status_name(b.status) << " c=" << claim_status_name(c.status)
                 << "] ";
    }
    return r;
}

// 8: the fuzz report is byte-stable across repeat runs and across worker
// counts.
Line check8() {
    Line r;
    const std::string base = "fuzz --seed 1 --count 100 --format json";
    const char* paths[3] = {"/tmp/chroma_accept_fuzz_a.json", "/tmp/chroma_accept_fuzz_b.json",
                            "/tmp/chroma_accept_fuzz_c.json"};
    const std::string extras[3] = {"", " --jobs 1", " --jobs 8"};
    std::string docs[3];
    for (int i = 0; i < 3; ++i) {
        std::remove(paths[i]);
        int rc = run_cli(base + extras[i] + " --output " + paths[i], nullptr);
        r.require(rc == 0 || rc == 2, "run " + std::to_string(i) + " exit code " + std::to_string(rc));
        docs[i] = slurp(paths[i]);
        r.require(!docs[i].empty(), "run " + std::to_string(i) + " produced no report");
    }
    r.require(docs[0] == docs[1], "repeat runs differ");
    r.require(docs[0] == docs[2], "1-job and 8-job reports differ");
    r.detail << "3 runs, " << docs[0].size() << " bytes each, byte-identical";
    return r;
}

// 9: the plane-contraction claim resolves to holds or violated on every
// instance of the large corpus, and each violation re-verifies in isolation.
Line check9() {
    Line r;
    long long held = 0, broken = 0, other = 0, failed_reverify = 0;
    for (std::size_t i = 0; i < g_corpora.fill_corpus.size(); ++i) {
        CheckOptions opts;
        opts.h = g_corpora.fill_h[i];
        ClaimVerdict v = check_L1(g_corpora.fill_corpus[i], g_corpora.fills[i], opts);
        if (v.status == ClaimStatus::holds) {
            ++held;
        } else if (v.status == ClaimStatus::violated) {
            ++broken;
            if (reverify_violation(v) != ClaimStatus::violated) ++failed_reverify;
        } else {
            ++other;
        }
    }
    r.require(other == 0, std::to_string(other) + " instance(s) did not resolve");
    r.require(failed_reverify == 0, std::to_string(failed_reverify) + " violation(s) failed re-verification");
    r.detail << held << " hold, " << broken << " violated, every violation re-verified";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-chroma-planes>\n");
        return 64;
    }
    g_binary = argv[1];

    struct Entry {
        int id;
        Line (*fn)();
        double budget_s;  // 0 = no stated budget
    };
    const Entry entries[] = {
        {1, check1, 1.0},   {2, check2, 1.0},   {3, check3, 300.0},
        {4, check4, 600.0}, {5, check5, 600.0}, {6, check6, 0.0},
        {7, check7, 120.0}, {8, check8, 0.0},   {9, check9, 0.0},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        auto t0 = Clock::now();
        Line line;
        try {
            line = e.fn();
        } catch (const std::exception& ex) {
            line.pass = false;
            line.detail.str("");
            line.detail << "exception: " << ex.what();
        }
        double dt = elapsed_s(t0);
        if (e.budget_s > 0 && dt >= e.budget_s) line.require(false, "over time budget");
        std::printf("criterion %d: %s (%.2f s) %s\n", e.id, line.pass ? "PASS" : "FAIL", dt,
                    line.detail.str().c_str());
        std::fflush(stdout);
        if (!line.pass) ++failures;
    }
    return failures;
}
