#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hcolor/graph.hpp"

namespace hcolor {

/// Bipartite graph between columns X and rows Y of a 0/1 matrix.
class BipartiteInstance {
public:
    BipartiteInstance() = default;
    /// columns[x] lists the rows adjacent to column x; every row id must be < y_count.
    BipartiteInstance(std::size_t y_count, const std::vector<std::vector<int>>& columns);

    /// Matrix text: one line per row (Y) of 0/1 characters, one character per
    /// column (X); whitespace inside a line is ignored, '#' lines and blank lines skipped.
    static BipartiteInstance parse_matrix(std::string_view text);

    std::size_t x_count() const noexcept { return columns_.size(); }
    std::size_t y_count() const noexcept { return y_count_; }
    const VertexSet& column(int x) const { return columns_.at(static_cast<std::size_t>(x)); }

    /// Same rows, only the listed columns (renumbered 0.. in the given order).
    BipartiteInstance restrict_columns(const std::vector<int>& xs) const;

private:
    std::size_t y_count_ = 0;
    std::vector<VertexSet> columns_;
};

struct NestednessResult {
    int k = 0;
    /// Columns of each part, ascending.
    std::vector<std::vector<int>> parts;
    /// Per part, columns by decreasing degree (ties by id): an echelon order.
    std::vector<std::vector<int>> column_orders;
    /// Per part, rows by decreasing degree within the part (ties by id).
    std::vector<std::vector<int>> row_orders;
};

/// Column order witnessing a chain of neighbourhoods, or nullopt.
std::optional<std::vector<int>> is_fully_nested(const BipartiteInstance& b);

/// Columns adjacent when their neighbourhoods are inclusion-incomparable.
Graph conflict_graph(const BipartiteInstance& b);

/// k = chromatic number of the conflict graph; parts are its colour classes.
NestednessResult nestedness_number(const BipartiteInstance& b);

}  // namespace hcolor
