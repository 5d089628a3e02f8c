#pragma once

#include "graph.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace chroma {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ParsedGraph {
    Graph graph;
    int duplicate_edges = 0;  // deduplicated, counted so callers can warn
    long long declared_edges = -1;  // DIMACS: the m of the p line (may differ from actual)
};

namespace detail {

inline std::optional<long long> parse_int(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (...) {
        return std::nullopt;
    }
    if (pos != tok.size()) return std::nullopt;
    return value;
}

inline ParsedGraph finish_graph(int n, std::vector<std::pair<int, int>> edges, long long declared) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    int dups = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());
    ParsedGraph out;
    out.graph = from_edge_list(n, edges);
    out.duplicate_edges = dups;
    out.declared_edges = declared;
    return out;
}

}  // namespace detail

// DIMACS .col: `c` comment lines, exactly one `p edge <n> <m>` line, then
// `e <u> <v>` lines with 1-based vertex ids. Self-loops are errors; duplicate
// edges are dropped and counted; an m that disagrees with the edge lines is
// reported via declared_edges, not an error.
inline ParsedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        if (head == "c") continue;
        if (head == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate 'p' line");
            std::string fmt, ntok, mtok;
            if (!(ls >> fmt >> ntok >> mtok)) throw ParseError(lineno, "expected 'p edge <n> <m>'");
            if (fmt != "edge") throw ParseError(lineno, "expected format 'edge', got '" + fmt + "'");
            auto nv = detail::parse_int(ntok);
            auto mv = detail::parse_int(mtok);
            if (!nv || !mv || *nv < 0 || *mv < 0) throw ParseError(lineno, "non-integer vertex or edge count");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after 'p' line");
            n = static_cast<int>(*nv);
            m = *mv;
        } else if (head == "e") {
            if (n < 0) throw ParseError(lineno, "'e' line before 'p' line");
            std::string utok, vtok;
            if (!(ls >> utok >> vtok)) throw ParseError(lineno, "expected 'e <u> <v>'");
            auto uv = detail::parse_int(utok);
            auto vv = detail::parse_int(vtok);
            if (!uv || !vv) throw ParseError(lineno, "non-integer vertex id");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
            long long u = *uv, v = *vv;
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError(lineno, "unknown line type '" + head + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'p' line");
    return detail::finish_graph(n, std::move(edges), m);
}

inline std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

// Plain edge list: first non-blank line is the vertex count, each following
// line one `u v` pair with 0-based ids.
inline ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (n < 0) {
            auto nv = detail::parse_int(first);
            if (!nv || *nv < 0) throw ParseError(lineno, "expected a non-negative vertex count");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after vertex count");
            n = static_cast<int>(*nv);
            continue;
        }
        std::string second;
        if (!(ls >> second)) throw ParseError(lineno, "expected 'u v'");
        auto uv = detail::parse_int(first);
        auto vv = detail::parse_int(second);
        if (!uv || !vv) throw ParseError(lineno, "non-integer vertex id");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
        long long u = *uv, v = *vv;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError(lineno, "missing vertex count line");
    return detail::finish_graph(n, std::move(edges), -1);
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// Sniff: DIMACS lines start with 'c' or 'p'; everything else is an edge list.
inline ParsedGraph parse_graph_auto(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == 'c' || ch == 'p') return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

}  // namespace chroma
