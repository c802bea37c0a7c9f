#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "hcolor/coloring.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/pattern.hpp"

namespace hcolor {

/// Raised when no H-avoiding colouring exists at any k <= n (e.g. H = K1+K1 on
/// a graph that is not complete multipartite, or H = K2 on a graph with an edge).
class NoAvoidingColoring : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    /// Worker threads for the branch-parallel search. Witnesses do not depend
    /// on this; node counts do.
    unsigned threads = 1;
};

struct SolveResult {
    int value = 0;
    Coloring witness;
    std::uint64_t nodes_explored = 0;
};

/// Proper, and every pair of classes induces an H-free graph.
/// Throws std::invalid_argument when the colouring does not cover V(G).
bool is_avoiding_coloring(const Graph& g, const PatternGraph& h, const Coloring& c);

/// An H-avoiding colouring with at most k classes, or nullopt.
/// `nodes`, when given, receives the number of search nodes visited.
std::optional<Coloring> decide_chi_H(const Graph& g, const PatternGraph& h, int k, const SolverOptions& options = {},
                                     std::uint64_t* nodes = nullptr);

/// Minimum number of classes of an H-avoiding colouring, with a witness.
SolveResult chi_H(const Graph& g, const PatternGraph& h, const SolverOptions& options = {});

inline constexpr std::size_t kBruteForceMaxVertices = 11;

/// Reference value by enumerating set partitions (restricted growth strings)
/// and testing each with the generic induced-subgraph detector. Refuses n > 11.
int brute_force_chi_H(const Graph& g, const PatternGraph& h);

}  // namespace hcolor
