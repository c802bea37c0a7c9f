#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcolor/vertex_set.hpp"

namespace hcolor {

/// Largest supported vertex count. Every exact routine here is desk-scale.
inline constexpr std::size_t kMaxVertices = 4096;

using Edge = std::pair<int, int>;

/// Undirected simple graph on the dense ids 0..n-1 with bitset adjacency.
/// Immutable once built; derived graphs are always new objects.
class Graph {
public:
    Graph() = default;
    /// Builds the graph; duplicate edges collapse, self-loops and
    /// out-of-range ids throw std::invalid_argument.
    Graph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t n() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const { return adj_.at(static_cast<std::size_t>(u)).contains(v); }
    std::size_t degree(int v) const { return neighbors(v).count(); }
    std::size_t max_degree() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    VertexSet all_vertices() const { return VertexSet::full(n()); }

    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    /// new id -> original id, ascending.
    std::vector<int> original_ids;
};

/// Subgraph induced by S; new ids follow increasing original id.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertex map phi: V(H) -> V(G), injective, with uv in E(H) iff phi(u)phi(v) in E(G).
using VertexMap = std::vector<int>;

/// Backtracking induced-subgraph search over degree-ordered pattern vertices.
std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h);

/// Exact chromatic number, or nullopt when it exceeds `limit`.
std::optional<int> chromatic_number(const Graph& g, int limit);

/// A proper colouring with chromatic_number(g) colours (g must have n <= limit-friendly size).
std::vector<int> optimal_proper_coloring(const Graph& g);

/// Size of a large clique found greedily; a cheap lower bound on the chromatic number.
int greedy_clique_size(const Graph& g);

int independence_number(const Graph& g);

/// All maximal independent sets in lexicographic order, or nullopt when more than `cap` exist.
std::optional<std::vector<VertexSet>> maximal_independent_sets(const Graph& g, std::size_t cap);

/// True when g has `size` pairwise-independent edges (no shared ends, no edges between them).
bool has_induced_matching(const Graph& g, int size);

/// Connected components, each as an ascending vertex list, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Two-colouring (0/1 per vertex) or nullopt for non-bipartite graphs.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace hcolor
