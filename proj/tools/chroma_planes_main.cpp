#include <chroma/claims.hpp>
#include <chroma/generators.hpp>
#include <chroma/io.hpp>
#include <chroma/json_io.hpp>
#include <chroma/log.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chroma;

// Exit codes: 0 success (check/fuzz: nothing violated), 1 usage or input
// error, 2 violations found, 3 oracle limit, exhausted budget, or an errored
// check.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolated = 2;
constexpr int kErrored = 3;

long long parse_ll(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos == tok.size()) return v;
    } catch (...) {
    }
    throw std::invalid_argument("expected an integer for " + what + ", got '" + tok + "'");
}

double parse_real(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos == tok.size()) return v;
    } catch (...) {
    }
    throw std::invalid_argument("expected a number for " + what + ", got '" + tok + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

// Generator mini-grammar:
//   complete:N  cycle:N  path:N  empty:N  petersen  mycielski:K
//   subdivided:N  er:N,P[,SEED]  gadget:cutk4  gadget:apex
//   join:A,B  (also join(A,B) when the comma placement is ambiguous)
Graph make_generated(const std::string& spec) {
    auto fail = [&](const std::string& why) -> Graph {
        throw std::invalid_argument("generator spec '" + spec + "': " + why);
    };
    if (spec.rfind("join(", 0) == 0 && spec.back() == ')') {
        std::string inner = spec.substr(5, spec.size() - 6);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            char ch = inner[i];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0)
                return join(make_generated(inner.substr(0, i)), make_generated(inner.substr(i + 1)));
        }
        return fail("join needs two comma-separated parts");
    }
    if (spec.rfind("join:", 0) == 0) {
        std::string rest = spec.substr(5);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] != ',') continue;
            try {
                Graph a = make_generated(rest.substr(0, i));
                Graph b = make_generated(rest.substr(i + 1));
                return join(a, b);
            } catch (const std::invalid_argument&) {
            }
        }
        return fail("join needs two comma-separated parts that each parse");
    }
    std::string head = spec, args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto int_arg = [&](long long lo, long long hi) {
        long long v = parse_ll(args, head);
        if (v < lo || v > hi)
            fail(head + " takes a count in " + std::to_string(lo) + ".." + std::to_string(hi));
        return static_cast<int>(v);
    };
    if (head == "complete") return complete(int_arg(0, 64));
    if (head == "cycle") return cycle(int_arg(3, 64));
    if (head == "path") return path(int_arg(0, 64));
    if (head == "empty") return empty_graph(int_arg(0, 64));
    if (head == "petersen") {
        if (!args.empty()) fail("petersen takes no arguments");
        return petersen();
    }
    if (head == "mycielski") return mycielski_iterate(int_arg(0, 5));
    if (head == "subdivided") return subdivided_complete(int_arg(1, 11));
    if (head == "er") {
        auto parts = split(args, ',');
        if (parts.size() < 2 || parts.size() > 3) fail("er takes n,p[,seed]");
        long long n = parse_ll(parts[0], "er vertex count");
        if (n < 0 || n > 64) fail("er vertex count must be within 0..64");
        double p = parse_real(parts[1], "er edge probability");
        std::uint64_t seed = 1;
        if (parts.size() == 3)
            seed = static_cast<std::uint64_t>(parse_ll(parts[2], "er seed"));
        return erdos_renyi(static_cast<int>(n), p, seed);
    }
    if (head == "gadget") {
        for (const auto& [label, g] : fuzz_structured_pool())
            if (label == "gadget:" + args) return g;
        return fail("unknown gadget '" + args + "' (cutk4, apex)");
    }
    return fail("unknown generator (complete, cycle, path, empty, petersen, mycielski, subdivided, er, gadget, join)");
}

Graph load_graph(const std::string& input, const std::string& gen) {
    if (input.empty() == gen.empty())
        throw std::invalid_argument("exactly one of --input and --gen is required");
    if (!gen.empty()) return make_generated(gen);
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file '" + input + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    ParsedGraph parsed = parse_graph_auto(text);
    if (parsed.duplicate_edges > 0)
        log_line(1, "input: dropped " + std::to_string(parsed.duplicate_edges) + " duplicate edge(s)");
    if (parsed.declared_edges >= 0 && parsed.declared_edges != parsed.graph.edge_count())
        log_line(1, "input: header declares " + std::to_string(parsed.declared_edges) + " edges, file has " +
                        std::to_string(parsed.graph.edge_count()));
    return parsed.graph;
}

void emit(const nlohmann::json& doc, const std::string& format, const std::string& output,
          const std::string& table) {
    if (format == "json")
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << table;
    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + output + "'");
        out << doc.dump(2) << '\n';
    }
}

struct OracleFlags {
    int ceiling = 16;
    long long budget = 50'000'000;

    MinorOptions minor() const { return MinorOptions{ceiling}; }
    ColoringOptions coloring() const { return ColoringOptions{budget}; }
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
    cmd->add_option("--ceiling-hadwiger", flags.ceiling,
                    "largest vertex count the minor search accepts")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    cmd->add_option("--budget-chi", flags.budget, "node budget for the coloring search")
        ->check(CLI::Range(0ll, (1ll << 62)))
        ->capture_default_str();
}

std::string status_word(ClaimStatus s) { return claim_status_name(s); }

void print_verdict_tree(std::ostream& os, const ClaimVerdict& v, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    char line[256];
    std::snprintf(line, sizeof(line), "%-16s %-13s instances=%lld", (pad + v.claim_id).c_str(),
                  status_word(v.status).c_str(), v.instances);
    os << line;
    if (!v.note.empty()) os << "  " << v.note;
    if (v.witness && !v.witness->detail.empty()) os << "  [" << v.witness->detail << "]";
    os << '\n';
    for (const ClaimVerdict& s : v.subclaims) print_verdict_tree(os, s, depth + 1);
}

bool tree_has(const ClaimVerdict& v, ClaimStatus s) {
    if (v.status == s) return true;
    for (const ClaimVerdict& sub : v.subclaims)
        if (tree_has(sub, s)) return true;
    return false;
}

int cmd_chi(const Graph& g, bool witness, const OracleFlags& flags, const std::string& format,
            const std::string& output) {
    auto t0 = std::chrono::steady_clock::now();
    ChromaticResult r = chromatic_number(g, flags.coloring());
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    log_line(1, "chi: searched " + std::to_string(r.nodes) + " nodes in " + std::to_string(ms.count()) + " ms");
    nlohmann::json doc;
    std::ostringstream table;
    if (r.outcome == SearchOutcome::found) {
        doc["chi"] = r.value;
        doc["nodes"] = r.nodes;
        table << "chi = " << r.value << '\n';
        if (witness && r.witness) {
            doc["witness"] = *r.witness;
            table << "colors:";
            for (int c : r.witness->color) table << ' ' << c;
            table << '\n';
        }
        emit(doc, format, output, table.str());
        return kOk;
    }
    doc["chi"] = nullptr;
    doc["lower_bound"] = r.lower_bound;
    doc["upper_bound"] = r.upper_bound;
    doc["nodes"] = r.nodes;
    table << "budget exhausted: chi within [" << r.lower_bound << ", " << r.upper_bound << "]\n";
    emit(doc, format, output, table.str());
    return kErrored;
}

int cmd_hadwiger(const Graph& g, bool witness, const OracleFlags& flags, const std::string& format,
                 const std::string& output) {
    auto t0 = std::chrono::steady_clock::now();
    int h = hadwiger_number(g, flags.minor());
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    log_line(1, "hadwiger: order " + std::to_string(h) + " in " + std::to_string(ms.count()) + " ms");
    nlohmann::json doc;
    doc["hadwiger"] = h;
    std::ostringstream table;
    table << "hadwiger = " << h << '\n';
    if (witness) {
        auto w = has_clique_minor(g, h, flags.minor());
        if (w) {
            doc["witness"] = *w;
            for (std::size_t i = 0; i < w->branch_sets.size(); ++i) {
                table << "branch set " << i << ":";
                for (int v : w->branch_sets[i]) table << ' ' << v;
                table << '\n';
            }
        }
    }
    emit(doc, format, output, table.str());
    return kOk;
}

int cmd_decompose(const Graph& g, const FillConfig& cfg, bool trace, const std::string& format,
                  const std::string& output) {
    Decomposition d = chromatic_fill(g, cfg);
    log_line(1, "decompose: " + std::to_string(d.assignment.plane_count) + " plane(s), " +
                    std::to_string(d.unplaced.size()) + " unplaced");
    nlohmann::json doc;
    doc["graph"] = g;
    doc["decomposition"] = d;
    if (!trace) doc["decomposition"].erase("trace");
    std::ostringstream table;
    table << "planes: " << d.assignment.plane_count << '\n';
    for (int p = 0; p < d.assignment.plane_count; ++p) {
        VertexSet members = d.assignment.plane_vertices(p);
        table << "plane " << p << ": " << members.size() << " vertices, "
              << plane_chromatic_number(d.assignment, p) << " colors\n";
    }
    table << "unplaced: " << d.unplaced.size() << '\n';
    emit(doc, format, output, table.str());
    return kOk;
}

const std::vector<std::string>& claim_labels() {
    static const std::vector<std::string> labels = {"all", "FIG1", "L1",   "C2.1", "C2.2", "C2.3", "C2.4",
                                                    "C2.5", "C2.6", "C3.1", "C3.2", "C3.3", "L3",   "T8"};
    return labels;
}

// Mirror subclaims run through the check that carries them.
std::string canonical_claim(const std::string& claim) {
    if (claim == "C2.2" || claim == "C2.4" || claim == "C3.3") return "C2.5";
    if (claim == "C2.3") return "L3";
    if (claim == "C3.2") return "C3.1";
    return claim;
}

int cmd_check(const std::string& claim, const std::string& input, const std::string& gen,
              const FillConfig& cfg, const OracleFlags& flags, const std::string& format,
              const std::string& output) {
    bool known = false;
    for (const std::string& label : claim_labels()) known = known || label == claim;
    if (!known) {
        std::ostringstream what;
        what << "unknown claim '" << claim << "'; valid labels:";
        for (const std::string& label : claim_labels()) what << ' ' << label;
        throw std::invalid_argument(what.str());
    }
    std::string wanted = canonical_claim(claim);

    std::vector<ClaimVerdict> verdicts;
    bool errored = false;
    CheckOptions opts;
    opts.minor = flags.minor();
    opts.coloring = flags.coloring();

    if (wanted == "FIG1" || wanted == "all") verdicts.push_back(check_fig1(opts));
    if (wanted != "FIG1") {
        Graph g = load_graph(input, gen);
        log_line(1, "check: graph with " + std::to_string(g.n) + " vertices, " +
                        std::to_string(g.edge_count()) + " edges");
        if (wanted == "C2.6" || wanted == "all") verdicts.push_back(check_C26({g}, opts));
        if (wanted != "C2.6") {
            try {
                Decomposition d = chromatic_fill(g, cfg);
                auto want = [&](const char* id) { return wanted == "all" || wanted == id; };
                if (want("L1")) verdicts.push_back(check_L1(g, d, opts));
                if (want("C2.1")) verdicts.push_back(check_classification(g, d));
                if (want("C2.5")) verdicts.push_back(check_completeness(g, d, opts));
                if (want("L3")) verdicts.push_back(check_L3(g, d, opts));
                if (want("C3.1")) verdicts.push_back(check_C31(g, d, opts));
                if (want("T8")) verdicts.push_back(check_T8(g, cfg, opts, &d));
            } catch (const std::exception& e) {
                errored = true;
                ClaimVerdict v;
                v.claim_id = wanted == "all" ? "harness" : wanted;
                v.status = ClaimStatus::inconclusive;
                v.note = std::string("filling failed: ") + e.what();
                verdicts.push_back(std::move(v));
            }
        }
    }

    nlohmann::json doc;
    doc["claims"] = verdicts;
    std::ostringstream table;
    bool violated = false;
    for (const ClaimVerdict& v : verdicts) {
        print_verdict_tree(table, v, 0);
        violated = violated || tree_has(v, ClaimStatus::violated);
    }
    emit(doc, format, output, table.str());
    if (errored) return kErrored;
    return violated ? kViolated : kOk;
}

int cmd_fuzz(FuzzConfig cfg, const std::string& format, const std::string& output) {
    auto t0 = std::chrono::steady_clock::now();
    ReportSet rs = fuzz(cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    log_line(1, "fuzz: " + std::to_string(cfg.count) + " instances in " + std::to_string(ms.count()) + " ms");

    nlohmann::json doc = rs;
    std::ostringstream table;
    table << "seed " << rs.seed << ", " << rs.instances << " instance(s), " << rs.combos.size()
          << " combo(s)\n";
    auto tally_block = [&](const std::map<std::string, ClaimCounts>& claims) {
        for (const auto& [id, c] : claims) {
            char line[160];
            std::snprintf(line, sizeof(line), "  %-14s holds=%-6lld violated=%-6lld inconclusive=%lld\n",
                          id.c_str(), c.holds, c.violated, c.inconclusive);
            table << line;
        }
    };
    if (!rs.corpus_claims.empty()) {
        table << "corpus claims:\n";
        tally_block(rs.corpus_claims);
    }
    for (const ComboReport& combo : rs.combos) {
        table << "combo " << fill_combo_label(combo.config) << ":\n";
        tally_block(combo.claims);
    }
    long long violations = static_cast<long long>(rs.corpus_violations.size());
    for (const ComboReport& combo : rs.combos) violations += static_cast<long long>(combo.violations.size());
    table << "violations: " << violations << '\n';
    auto show_violation = [&](const ClaimVerdict& v) {
        table << "  " << v.claim_id << ": " << v.note;
        if (v.witness && !v.witness->detail.empty()) table << " [" << v.witness->detail << "]";
        table << '\n';
    };
    for (const ClaimVerdict& v : rs.corpus_violations) show_violation(v);
    for (const ComboReport& combo : rs.combos)
        for (const ClaimVerdict& v : combo.violations) show_violation(v);
    if (!rs.errors.empty()) {
        table << "errors: " << rs.errors.size() << '\n';
        for (const std::string& e : rs.errors) table << "  " << e << '\n';
    }
    emit(doc, format, output, table.str());
    if (rs.any_error()) return kErrored;
    return rs.any_violation() ? kViolated : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic-plane decompositions with exact coloring and minor oracles"};
    app.require_subcommand(1);

    std::string input, gen, output, format = "table";
    bool witness = false, trace = false;
    OracleFlags flags;
    FillConfig fill_cfg;
    std::string placement = "capacity4", residual = "process-all";

    auto add_io = [&](CLI::App* cmd) {
        auto* in = cmd->add_option("--input", input, "graph file (DIMACS or edge list; '-' for stdin)");
        auto* gn = cmd->add_option("--gen", gen, "generator spec, e.g. complete:8 or join:cycle:5,complete:5");
        in->excludes(gn);
        cmd->add_option("--output", output, "write the JSON document to this path");
        cmd->add_option("--format", format, "stdout format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
    };
    auto add_fill = [&](CLI::App* cmd) {
        cmd->add_option("--capacity", fill_cfg.capacity, "colors per plane")
            ->check(CLI::Range(1, 64))
            ->capture_default_str();
        cmd->add_option("--placement", placement, "placement rule")
            ->check(CLI::IsMember({"capacity4", "strict-lemma2"}))
            ->capture_default_str();
        cmd->add_option("--residual", residual, "residual policy")
            ->check(CLI::IsMember({"process-all", "discard-paper"}))
            ->capture_default_str();
    };

    CLI::App* dec = app.add_subcommand("decompose", "fill planes over the input graph");
    add_io(dec);
    add_fill(dec);
    add_oracle_flags(dec, flags);
    dec->add_flag("--trace", trace, "keep the per-plane trace in the JSON document");

    CLI::App* chi = app.add_subcommand("chi", "exact chromatic number");
    add_io(chi);
    add_oracle_flags(chi, flags);
    chi->add_flag("--witness", witness, "emit a proper coloring");

    CLI::App* had = app.add_subcommand("hadwiger", "largest clique-minor order");
    add_io(had);
    add_oracle_flags(had, flags);
    had->add_flag("--witness", witness, "emit the branch sets");

    std::string claim = "all";
    CLI::App* chk = app.add_subcommand("check", "run claim checks against one graph");
    add_io(chk);
    add_fill(chk);
    add_oracle_flags(chk, flags);
    chk->add_option("--claim", claim, "claim label (or 'all')")->capture_default_str();

    FuzzConfig fuzz_cfg;
    std::string n_range = "5..9", p_list = "0.3,0.5,0.7";
    bool no_structured = false;
    CLI::App* fz = app.add_subcommand("fuzz", "random corpus sweep over every claim");
    fz->add_option("--seed", fuzz_cfg.seed, "master seed")->capture_default_str();
    fz->add_option("--count", fuzz_cfg.count, "instance count")
        ->check(CLI::Range(0, 1'000'000))
        ->capture_default_str();
    fz->add_option("--n", n_range, "vertex count range, e.g. 5..9 or 7")->capture_default_str();
    fz->add_option("--p", p_list, "comma-separated edge probabilities")->capture_default_str();
    fz->add_option("--jobs", fuzz_cfg.jobs, "worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    fz->add_flag("--no-structured", no_structured, "skip the fixed structured instances");
    add_fill(fz);
    add_oracle_flags(fz, flags);
    fz->add_option("--output", output, "write the JSON report to this path");
    fz->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        fill_cfg.placement =
            placement == "capacity4" ? PlacementMode::capacity4 : PlacementMode::strict_lemma2;
        fill_cfg.residual =
            residual == "process-all" ? ResidualPolicy::process_all : ResidualPolicy::discard_paper;
        fill_cfg.minor = flags.minor();
        fill_cfg.coloring = flags.coloring();

        if (app.got_subcommand(dec)) return cmd_decompose(load_graph(input, gen), fill_cfg, trace, format, output);
        if (app.got_subcommand(chi)) return cmd_chi(load_graph(input, gen), witness, flags, format, output);
        if (app.got_subcommand(had)) return cmd_hadwiger(load_graph(input, gen), witness, flags, format, output);
        if (app.got_subcommand(chk)) return cmd_check(claim, input, gen, fill_cfg, flags, format, output);
        if (app.got_subcommand(fz)) {
            auto dots = n_range.find("..");
            if (dots == std::string::npos) {
                fuzz_cfg.n_min = fuzz_cfg.n_max = static_cast<int>(parse_ll(n_range, "--n"));
            } else {
                fuzz_cfg.n_min = static_cast<int>(parse_ll(n_range.substr(0, dots), "--n low end"));
                fuzz_cfg.n_max = static_cast<int>(parse_ll(n_range.substr(dots + 2), "--n high end"));
            }
            fuzz_cfg.probabilities.clear();
            for (const std::string& tok : split(p_list, ','))
                fuzz_cfg.probabilities.push_back(parse_real(tok, "--p"));
            fuzz_cfg.structured_mix = !no_structured;
            fuzz_cfg.minor = flags.minor();
            fuzz_cfg.coloring = flags.coloring();
            if (fz->count("--placement") || fz->count("--residual")) {
                std::vector<FillConfig> combos;
                for (FillConfig combo : default_fill_grid(fuzz_cfg.minor, fuzz_cfg.coloring)) {
                    combo.capacity = fill_cfg.capacity;
                    if (fz->count("--placement") && combo.placement != fill_cfg.placement) continue;
                    if (fz->count("--residual") && combo.residual != fill_cfg.residual) continue;
                    combos.push_back(combo);
                }
                fuzz_cfg.combos = std::move(combos);
            } else if (fz->count("--capacity")) {
                std::vector<FillConfig> combos = default_fill_grid(fuzz_cfg.minor, fuzz_cfg.coloring);
                for (FillConfig& combo : combos) combo.capacity = fill_cfg.capacity;
                fuzz_cfg.combos = std::move(combos);
            }
            return cmd_fuzz(fuzz_cfg, format, output);
        }
        return kUsage;
    } catch (const OracleLimitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kErrored;
    } catch (const FillError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kErrored;
    }
}
