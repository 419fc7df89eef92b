#include "wcg/io.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace wcg {

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (Edge e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& reason) {
    throw std::runtime_error("edge list: line " + std::to_string(line_no) + ": " + reason);
}

// Exactly two non-negative integers separated by blanks.
std::pair<int, int> parse_int_pair(std::string_view line, std::size_t line_no) {
    int values[2] = {0, 0};
    std::size_t pos = 0;
    for (int k = 0; k < 2; ++k) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, values[k]);
        if (ec != std::errc() || ptr == begin) parse_fail(line_no, "expected two integers");
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos != line.size()) parse_fail(line_no, "trailing characters");
    return {values[0], values[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    auto blank = [](std::string_view s) {
        return s.find_first_not_of(" \t\r") == std::string_view::npos;
    };

    if (lines.empty() || blank(lines[0])) {
        throw std::runtime_error("edge list: missing header line");
    }
    auto [n, m] = parse_int_pair(lines[0], 1);
    if (n < 0 || m < 0) parse_fail(1, "negative header values");

    Graph g(n);
    std::size_t line_idx = 1;
    std::pair<int, int> previous{-1, -1};
    for (int i = 0; i < m; ++i, ++line_idx) {
        if (line_idx >= lines.size() || blank(lines[line_idx])) {
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edge lines, found " + std::to_string(i));
        }
        auto [u, v] = parse_int_pair(lines[line_idx], line_idx + 1);
        if (u < 0 || v >= n || u >= v) parse_fail(line_idx + 1, "requires 0 <= u < v < n");
        if (std::pair<int, int>{u, v} <= previous) {
            parse_fail(line_idx + 1, "edges must be in ascending order");
        }
        previous = {u, v};
        g.add_edge(u, v);
    }
    for (; line_idx < lines.size(); ++line_idx) {
        if (!blank(lines[line_idx])) parse_fail(line_idx + 1, "unexpected extra content");
    }
    return g;
}

std::string export_dot(const Graph& g, const std::vector<Edge>& highlight) {
    std::set<Edge> marked(highlight.begin(), highlight.end());
    for (Edge e : marked) {
        if (!g.has_edge(e)) {
            throw std::invalid_argument("export_dot: highlighted edge {" +
                                        std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} not in graph");
        }
    }
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (Edge e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
        if (marked.count(e)) out += " [color=purple]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace wcg
