#include "hcolor/coloring.hpp"

#include <stdexcept>

namespace hcolor {

Coloring Coloring::from_assignment(const std::vector<int>& assignment) {
    Coloring c;
    std::vector<int> relabel;
    c.assignment_.reserve(assignment.size());
    for (int colour : assignment) {
        if (colour < 0) throw std::invalid_argument("colouring is partial: some vertex has no colour");
        if (static_cast<std::size_t>(colour) >= relabel.size()) relabel.resize(static_cast<std::size_t>(colour) + 1, -1);
        int& target = relabel[static_cast<std::size_t>(colour)];
        if (target < 0) target = c.class_count_++;
        c.assignment_.push_back(target);
    }
    return c;
}

Coloring Coloring::from_classes(std::size_t n, const std::vector<VertexSet>& classes) {
    std::vector<int> assignment(n, -1);
    int label = 0;
    for (const auto& cls : classes) {
        if (cls.empty()) continue;
        cls.for_each([&](int v) {
            if (static_cast<std::size_t>(v) >= n) throw std::invalid_argument("class member outside the vertex range");
            if (assignment[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("classes overlap");
            assignment[static_cast<std::size_t>(v)] = label;
        });
        ++label;
    }
    return from_assignment(assignment);
}

std::vector<VertexSet> Coloring::classes() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(class_count_), VertexSet(n()));
    for (std::size_t v = 0; v < n(); ++v) out[static_cast<std::size_t>(assignment_[v])].insert(static_cast<int>(v));
    return out;
}

std::vector<std::vector<int>> Coloring::class_lists() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(class_count_));
    for (std::size_t v = 0; v < n(); ++v) out[static_cast<std::size_t>(assignment_[v])].push_back(static_cast<int>(v));
    return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.n() != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (c.color_of(u) == c.color_of(v)) return false;
    return true;
}

}  // namespace hcolor
