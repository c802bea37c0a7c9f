#pragma once

#include <cstddef>
#include <vector>

#include "hcolor/graph.hpp"

namespace hcolor {

/// A partition of V(G) into labelled classes 0..class_count()-1, all nonempty.
class Coloring {
public:
    Coloring() = default;

    /// Relabels colours to 0,1,2,... in order of first appearance by vertex id.
    /// Throws std::invalid_argument on negative entries (a partial assignment).
    static Coloring from_assignment(const std::vector<int>& assignment);
    /// Classes must partition 0..n-1; empty classes are dropped.
    static Coloring from_classes(std::size_t n, const std::vector<VertexSet>& classes);

    std::size_t n() const noexcept { return assignment_.size(); }
    int class_count() const noexcept { return class_count_; }
    int color_of(int v) const { return assignment_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& assignment() const noexcept { return assignment_; }
    std::vector<VertexSet> classes() const;
    /// Classes as sorted member lists, ordered by class index.
    std::vector<std::vector<int>> class_lists() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> assignment_;
    int class_count_ = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

}  // namespace hcolor
