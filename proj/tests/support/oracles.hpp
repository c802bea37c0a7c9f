#pragma once

// Reference implementations for tests. They use adjacency matrices and plain
// enumeration only, never the library's detectors or search code.

#include <cstdint>
#include <random>
#include <vector>

#include "hcolor/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const hcolor::Graph& g);

/// One representative per isomorphism class of graphs on n vertices (n <= 7).
const std::vector<hcolor::Graph>& catalog(int n);

/// Does some |V(H)|-subset of G induce a copy of H? Scans subsets and permutations.
bool has_induced_copy(const Matrix& g, const Matrix& h);
bool has_induced_copy(const hcolor::Graph& g, const hcolor::Graph& h);

/// Chromatic number by enumerating set partitions into independent blocks.
int chromatic_number(const hcolor::Graph& g);

/// Visits every set partition of 0..n-1 as a restricted growth string.
template <class F>
void for_each_partition(int n, F&& visit) {
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v, int blocks) -> void {
        if (v == n) {
            visit(rgs, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(v)] = b;
            self(self, v + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    rec(rec, 0, 0);
}

/// Is the colouring (block index per vertex) proper with every pair of blocks
/// free of an induced H? Checked with has_induced_copy on each union.
bool avoiding(const hcolor::Graph& g, const hcolor::Graph& h, const std::vector<int>& blocks, int count);

/// Minimum H-avoiding colouring size over all partitions; -1 when none exists.
int min_avoiding(const hcolor::Graph& g, const hcolor::Graph& h);

/// All optimal H-avoiding partitions, each as a block-index vector.
std::vector<std::vector<int>> optimal_avoiding_partitions(const hcolor::Graph& g, const hcolor::Graph& h);

/// columns[x] is a bitmask over rows. Two columns conflict when rows y, y'
/// exist with x~y, x'~y', x!~y', x'!~y (a direct 2K2 search).
bool columns_conflict(std::uint32_t a, std::uint32_t b, int rows);

/// Fewest parts in a partition of the columns into conflict-free parts.
int min_nested_partition(const std::vector<std::uint32_t>& columns, int rows);

hcolor::Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace oracle
