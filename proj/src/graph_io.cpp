#include "hcolor/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hcolor {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    while (!text.empty()) {
        auto nl = text.find('\n');
        out.push_back({number++, trim(text.substr(0, nl))});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, found '" + std::string(tok) + "'");
    return v;
}

std::size_t vertex_count(long long n, std::size_t line) {
    if (n < 0) throw ParseError(line, "negative vertex count");
    if (static_cast<unsigned long long>(n) > kMaxVertices)
        throw ParseError(line, "vertex count " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxVertices));
    return static_cast<std::size_t>(n);
}

Edge checked_edge(long long u, long long v, std::size_t n, std::size_t line, int base) {
    const long long lo = base;
    const long long hi = static_cast<long long>(n) - 1 + base;
    if (u < lo || u > hi || v < lo || v > hi)
        throw ParseError(line, "vertex id out of range " + std::to_string(lo) + ".." + std::to_string(hi));
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u) + " is not allowed");
    return {static_cast<int>(u - base), static_cast<int>(v - base)};
}

Graph parse_edgelist(std::string_view text) {
    std::optional<std::size_t> n;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    for (const auto& [number, line] : split_lines(text)) {
        if (line.empty() || line.front() == '#') continue;
        auto tok = tokens(line);
        if (!n) {
            if (tok.size() != 1) throw ParseError(number, "expected the vertex count on its own line");
            n = vertex_count(to_int(tok[0], number), number);
            header_line = number;
            continue;
        }
        if (tok.size() != 2) throw ParseError(number, "expected 'u v'");
        edges.push_back(checked_edge(to_int(tok[0], number), to_int(tok[1], number), *n, number, 0));
    }
    if (!n) throw ParseError(header_line ? header_line : 1, "missing vertex count");
    return Graph(*n, edges);
}

Graph parse_dimacs(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    for (const auto& [number, line] : split_lines(text)) {
        if (line.empty() || line.front() == 'c') continue;
        auto tok = tokens(line);
        if (tok[0] == "p") {
            if (n) throw ParseError(number, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError(number, "expected 'p edge n m'");
            n = vertex_count(to_int(tok[2], number), number);
            if (to_int(tok[3], number) < 0) throw ParseError(number, "negative edge count");
        } else if (tok[0] == "e") {
            if (!n) throw ParseError(number, "edge before the problem line");
            if (tok.size() != 3) throw ParseError(number, "expected 'e u v'");
            edges.push_back(checked_edge(to_int(tok[1], number), to_int(tok[2], number), *n, number, 1));
        } else {
            throw ParseError(number, "unknown DIMACS line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!n) throw ParseError(1, "missing 'p edge n m' line");
    return Graph(*n, edges);
}

Graph parse_matrix(std::string_view text) {
    std::vector<std::string> rows;
    std::vector<std::size_t> row_line;
    for (const auto& [number, line] : split_lines(text)) {
        if (line.empty() || line.front() == '#') continue;
        std::string row;
        for (char c : line) {
            if (c == ' ' || c == '\t') continue;
            if (c != '0' && c != '1') throw ParseError(number, std::string("unexpected matrix entry '") + c + "'");
            row.push_back(c);
        }
        rows.push_back(std::move(row));
        row_line.push_back(number);
    }
    const std::size_t n = rows.size();
    vertex_count(static_cast<long long>(n), row_line.empty() ? 1 : row_line.back());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ParseError(row_line[i], "row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                              std::to_string(n));
        if (rows[i][i] != '0') throw ParseError(row_line[i], "self-loop on the diagonal");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i])
                throw ParseError(row_line[j], "matrix is not symmetric at (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ")");
            if (rows[i][j] == '1') edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(n, edges);
}

}  // namespace

GraphFormat parse_format(std::string_view token) {
    if (token == "edgelist") return GraphFormat::edgelist;
    if (token == "dimacs") return GraphFormat::dimacs;
    if (token == "matrix") return GraphFormat::matrix;
    throw std::invalid_argument("unknown graph format '" + std::string(token) + "'");
}

std::string_view format_name(GraphFormat format) {
    switch (format) {
        case GraphFormat::edgelist: return "edgelist";
        case GraphFormat::dimacs: return "dimacs";
        case GraphFormat::matrix: return "matrix";
    }
    return "edgelist";
}

GraphFormat format_from_path(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
    if (ends_with(".mat") || ends_with(".matrix")) return GraphFormat::matrix;
    return GraphFormat::edgelist;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edgelist: return parse_edgelist(text);
        case GraphFormat::dimacs: return parse_dimacs(text);
        case GraphFormat::matrix: return parse_matrix(text);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, GraphFormat format) { return parse_graph(read_file(path), format); }

std::string write_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace hcolor
