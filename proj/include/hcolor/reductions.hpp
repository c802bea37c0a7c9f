#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hcolor/coloring.hpp"
#include "hcolor/graph.hpp"

namespace hcolor {

/// 3-uniform hypergraph on vertices 0..n-1.
class Hypergraph3 {
public:
    using HyperEdge = std::array<int, 3>;

    Hypergraph3() = default;
    /// Throws std::invalid_argument for an edge with a repeated or out-of-range vertex.
    Hypergraph3(std::size_t n, std::vector<HyperEdge> edges);

    /// First line "n m", then m lines "a b c" (0-based); '#' and blank lines are skipped.
    static Hypergraph3 parse(std::string_view text);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    const std::vector<HyperEdge>& edges() const noexcept { return edges_; }

private:
    std::size_t n_ = 0;
    std::vector<HyperEdge> edges_;
};

inline constexpr std::size_t kHypergraphBruteForceMax = 20;

/// A 0/1 colouring with no monochromatic edge, or nullopt. Exhaustive over
/// bitmasks in increasing order; refuses n > 20.
std::optional<std::vector<int>> hypergraph_2colorable(const Hypergraph3& t);

/// Pentagon-matrix construction for the P3 question with 5 colours.
/// Pentagon C(i,j) (row i < n, column j < m) owns vertices 5(i*m + j) + t for
/// t = 0..4 ("first" .. "fifth"), in cycle order. Gadget l has centre
/// 5nm + 4l and leaves +1, +2, +3, attached to the fifth vertex of C(p,l),
/// C(q,l), C(r,l) for edge l = {p, q, r}. Requires n, m >= 1.
Graph reduce_to_p3(const Hypergraph3& t);

/// Construction for the P4 question with 3 colours. x_i = i, x_i' = n + i,
/// z = 2n; gadget l starts at 2n + 1 + 11l with a1 b1 c1 a2 b2 c2 a3 b3 c3 w1 w2.
/// Requires n >= 4 and m >= 1.
Graph reduce_to_p4(const Hypergraph3& t);

/// P4-avoiding 3-colouring of reduce_to_p4(t) extending a proper hypergraph
/// 2-colouring (entries 0/1). Throws std::invalid_argument when hcol is not proper.
Coloring lift_coloring_p4(const Hypergraph3& t, const std::vector<int>& hcol);

}  // namespace hcolor
