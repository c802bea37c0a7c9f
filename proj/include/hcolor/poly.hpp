#pragma once

#include <cstddef>
#include <optional>

#include "hcolor/coloring.hpp"
#include "hcolor/graph.hpp"

namespace hcolor {

/// Classes are the groups of vertices with equal neighbourhoods, numbered by
/// smallest member. This is the unique optimal K2+K1-avoiding colouring.
Coloring k2k1_coloring(const Graph& g);

/// G plus an edge uv for every induced P3 u-w-v of G (one round, i.e. the square of G).
Graph p3_closure(const Graph& g);

/// chi(p3_closure(G)), which equals the P3-avoiding chromatic number.
int chi_p3_via_closure(const Graph& g);

/// A P3-avoiding colouring with at most 3 classes, or nullopt. Only graphs of
/// maximum degree <= 2 qualify: paths take 1,2,3,1,2,3,... from an end and a
/// cycle needs length divisible by 3.
std::optional<Coloring> decide_p3_at_most_3(const Graph& g);

/// Cap on maximal independent sets enumerated by decide_2k2_at_most_3. A
/// 4K2-free graph stays far below it at any size this library handles.
inline constexpr std::size_t kMisCap = 1'000'000;

/// A 2K2-avoiding colouring with at most 3 classes, or nullopt.
///
/// Any such colouring has classes Y1, Y2, Y3 inside maximal independent sets
/// X1, X2, X3 covering V. For each covering triple, vertices in one X are forced,
/// vertices in all three are isolated, and the doubly covered rest is settled by
/// propagating forced moves and then a 2-SAT over the remaining placements. Each
/// 2K2 touches at most two undecided vertices, so pairwise clauses are exact.
/// Throws std::logic_error when the enumeration cap is hit.
std::optional<Coloring> decide_2k2_at_most_3(const Graph& g);

}  // namespace hcolor
