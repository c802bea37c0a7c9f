#pragma once

#include <cstddef>

#include "hcolor/graph.hpp"

namespace hcolor::gen {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Perfect matching on 2*edges vertices: edges (2i, 2i+1).
Graph matching(std::size_t edges);
/// d-dimensional hypercube; vertices are bit strings, adjacent when they differ in one bit.
Graph hypercube(int d);
Graph petersen();
/// K_{1,legs} with every edge subdivided once: centre 0, leg i is 0 - (2i+1) - (2i+2).
Graph subdivided_star(std::size_t legs);
/// Disjoint union, b's ids shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace hcolor::gen
