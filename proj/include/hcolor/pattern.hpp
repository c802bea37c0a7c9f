#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "hcolor/graph.hpp"

namespace hcolor {

/// Named forbidden patterns with a dedicated pair detector; Custom uses induced search.
enum class PatternTag { K1pK1, K2, K2pK1, P3, P4, TwoK2, Custom };

std::string_view tag_token(PatternTag tag);

struct BipartitionBounds {
    int k1;  ///< min over bipartitions of the larger side
    int k2;  ///< min over bipartitions of the smaller side
};

/// Enumerates every bipartition (per component the 2-colouring up to swap;
/// isolated vertices go either way). Throws std::invalid_argument when h is not bipartite.
BipartitionBounds compute_k1_k2(const Graph& h);

/// The forbidden bipartite pattern H with its derived parameters.
class PatternGraph {
public:
    /// Classifies `h` against the named patterns by brute-force isomorphism.
    explicit PatternGraph(Graph h);

    /// "K1+K1", "K2", "K2+K1", "P3", "P4" or "2K2".
    static PatternGraph named(std::string_view token);
    static PatternGraph from_tag(PatternTag tag);

    const Graph& graph() const noexcept { return graph_; }
    PatternTag tag() const noexcept { return tag_; }
    int k1() const noexcept { return bounds_.k1; }
    int k2() const noexcept { return bounds_.k2; }
    /// Token for the named tags, "custom(n=..,m=..)" otherwise.
    std::string name() const;

    /// Same graph, forced onto the generic induced-subgraph detector.
    PatternGraph as_custom() const;

private:
    Graph graph_;
    PatternTag tag_ = PatternTag::Custom;
    BipartitionBounds bounds_{0, 0};
};

/// True iff G[A ∪ B] has no induced copy of H. A and B must be disjoint
/// independent sets of G (std::invalid_argument otherwise).
bool pair_is_H_free(const Graph& g, const VertexSet& a, const VertexSet& b, const PatternGraph& h);

namespace detail {

/// pair_is_H_free without the precondition checks, negated.
bool pair_contains(const Graph& g, const VertexSet& a, const VertexSet& b, const PatternGraph& h);

/// Whether G[A ∪ B] contains an induced H that uses vertex v (v ∈ A).
/// Used for incremental checks once G[(A \ {v}) ∪ B] is known to be H-free.
bool pair_contains_through(const Graph& g, const VertexSet& a, const VertexSet& b, int v, const PatternGraph& h);

}  // namespace detail

}  // namespace hcolor
