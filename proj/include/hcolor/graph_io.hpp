#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hcolor/graph.hpp"

namespace hcolor {

enum class GraphFormat { edgelist, dimacs, matrix };

/// Thrown for malformed input; carries the 1-based line where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

GraphFormat parse_format(std::string_view token);
std::string_view format_name(GraphFormat format);
/// Guess from the file extension: .col/.dimacs -> dimacs, .mat/.matrix -> matrix, else edgelist.
GraphFormat format_from_path(std::string_view path);

/// Edgelist: first line "n", then "u v" per line (0-based).
/// DIMACS: "c" comments, "p edge n m", "e u v" (1-based).
/// Matrix: n rows of n characters from {0,1}; symmetric with zero diagonal.
/// Blank lines and lines starting with '#' are ignored in edgelist and matrix input.
Graph parse_graph(std::string_view text, GraphFormat format);
Graph load_graph(const std::string& path, GraphFormat format);

std::string write_edgelist(const Graph& g);

std::string read_file(const std::string& path);

}  // namespace hcolor
