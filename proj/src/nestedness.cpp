#include "hcolor/nestedness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "hcolor/graph_io.hpp"

namespace hcolor {

BipartiteInstance::BipartiteInstance(std::size_t y_count, const std::vector<std::vector<int>>& columns)
    : y_count_(y_count) {
    columns_.reserve(columns.size());
    for (const auto& col : columns) {
        VertexSet s(y_count);
        for (int y : col) {
            if (y < 0 || static_cast<std::size_t>(y) >= y_count)
                throw std::invalid_argument("row index " + std::to_string(y) + " outside 0.." +
                                            std::to_string(y_count) + "-1");
            s.insert(y);
        }
        columns_.push_back(std::move(s));
    }
}

BipartiteInstance BipartiteInstance::parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0, width = 0;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        ++number;
        std::string row;
        for (char c : line) {
            if (c == ' ' || c == '\t' || c == '\r') continue;
            row.push_back(c);
        }
        if (row.empty() || row.front() == '#') continue;
        for (char c : row)
            if (c != '0' && c != '1') throw ParseError(number, std::string("unexpected matrix entry '") + c + "'");
        if (rows.empty()) width = row.size();
        if (row.size() != width)
            throw ParseError(number, "row has " + std::to_string(row.size()) + " entries, expected " +
                                         std::to_string(width));
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<int>> columns(width);
    for (std::size_t y = 0; y < rows.size(); ++y)
        for (std::size_t x = 0; x < width; ++x)
            if (rows[y][x] == '1') columns[x].push_back(static_cast<int>(y));
    return BipartiteInstance(rows.size(), columns);
}

BipartiteInstance BipartiteInstance::restrict_columns(const std::vector<int>& xs) const {
    BipartiteInstance out;
    out.y_count_ = y_count_;
    for (int x : xs) out.columns_.push_back(column(x));
    return out;
}

std::optional<std::vector<int>> is_fully_nested(const BipartiteInstance& b) {
    std::vector<int> order(b.x_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int p, int q) { return b.column(p).count() > b.column(q).count(); });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (!b.column(order[i]).is_subset_of(b.column(order[i - 1]))) return std::nullopt;
    return order;
}

Graph conflict_graph(const BipartiteInstance& b) {
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < b.x_count(); ++x)
        for (std::size_t z = x + 1; z < b.x_count(); ++z) {
            const auto& nx = b.column(static_cast<int>(x));
            const auto& nz = b.column(static_cast<int>(z));
            if (!nx.is_subset_of(nz) && !nz.is_subset_of(nx)) edges.emplace_back(x, z);
        }
    return Graph(b.x_count(), edges);
}

NestednessResult nestedness_number(const BipartiteInstance& b) {
    NestednessResult r;
    if (b.x_count() == 0) return r;
    const auto colour = optimal_proper_coloring(conflict_graph(b));
    r.k = *std::max_element(colour.begin(), colour.end()) + 1;
    r.parts.assign(static_cast<std::size_t>(r.k), {});
    for (std::size_t x = 0; x < colour.size(); ++x)
        r.parts[static_cast<std::size_t>(colour[x])].push_back(static_cast<int>(x));
    // Number parts by their smallest column.
    std::sort(r.parts.begin(), r.parts.end());
    for (const auto& part : r.parts) {
        auto local = is_fully_nested(b.restrict_columns(part));
        if (!local) throw std::logic_error("conflict-free part is not nested");
        std::vector<int> cols;
        for (int i : *local) cols.push_back(part[static_cast<std::size_t>(i)]);
        r.column_orders.push_back(std::move(cols));

        std::vector<int> rows(b.y_count());
        std::iota(rows.begin(), rows.end(), 0);
        std::vector<std::size_t> degree(b.y_count(), 0);
        for (int x : part) b.column(x).for_each([&](int y) { ++degree[static_cast<std::size_t>(y)]; });
        std::stable_sort(rows.begin(), rows.end(), [&](int p, int q) {
            return degree[static_cast<std::size_t>(p)] > degree[static_cast<std::size_t>(q)];
        });
        r.row_orders.push_back(std::move(rows));
    }
    return r;
}

}  // namespace hcolor
