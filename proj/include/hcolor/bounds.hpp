#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hcolor/coloring.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/pattern.hpp"

namespace hcolor {

enum class BoundKind { lower, upper, exact };
std::string_view bound_kind_name(BoundKind kind);

/// One bound on chi_H. Real-valued formulas are reported as integer ceilings;
/// the raw value and every parameter used sit in `inputs`.
struct BoundReport {
    std::string name;
    BoundKind kind = BoundKind::lower;
    long long value = 0;
    std::map<std::string, double> inputs;
};

/// Least k >= 1 with ell * k(k-1)/2 >= edge_count.
/// Throws std::invalid_argument when ell < 0, or ell == 0 while edge_count > 0.
long long edge_bound_lower(long long edge_count, long long ell);

/// Upper bound from the class-splitting argument. The k1 term always applies;
/// k2 >= 3 adds the k2 term and k2 == 2 the n - alpha + 1 term. The report is
/// named after the term attaining the minimum ("prop5_k1", "prop5_k2", "prop5_alpha").
/// Throws std::invalid_argument for k1 < 2 or n, chi, alpha < 1.
BoundReport prop5_upper(long long n, long long chi, long long alpha, int k1, int k2);

/// Edges of a longest trail in K_k: C(k,2) for odd k, C(k,2) - k/2 + 1 for even k.
long long longest_trail_edges(int k);

/// Canonical longest trail in K_k on vertices 1..k starting at 1 (Hierholzer,
/// smallest unused neighbour first). For even k the matching (2,3),(4,5),...,(k-2,k-1)
/// is removed first. Returns longest_trail_edges(k) + 1 vertices.
std::vector<int> complete_graph_trail(int k);

/// 2K2-avoiding chromatic number of P_n: the least k whose longest trail in K_k
/// has at least ceil((n-1)/3) edges. Throws for n < 2.
int chi_2k2_path(int n);

/// The least k with floor((k+1)/2)(k-2) >= ceil((n-1)/3), the closed form as it
/// is usually quoted. It overshoots chi_2k2_path (see README). Throws for n < 2.
int chi_2k2_path_published(int n);

/// Colouring of P_n (vertex v-1 holds path vertex v) with chi_2k2_path(n) classes:
/// vertices 3i-4, 3i-2, 3i take the i-th vertex of complete_graph_trail.
Coloring eulerian_path_coloring(int n);

/// ceil(sqrt(n + 1/4) + 1/2) for the perfect matching on n vertices (n even, n >= 2).
int chi_2k2_matching(int n);
/// Edge i of the matching (vertices 2i, 2i+1) takes the ends of the i-th edge of
/// K_k in lexicographic order, k = chi_2k2_matching(n).
Coloring matching_witness(int n);

/// ceil(sqrt(n - 3/4) + 1/2) for the once-subdivided star on n vertices (n odd, n >= 3).
int chi_2k2_subdivided_star(int n);

/// Exact values 2 and 4 for d = 2, 3; the ceiling of sqrt(d 2^d / (2d-1)) + 1/2
/// for d >= 4. Throws for d < 2.
int cube_lower_bound(int d);

/// Incidence graph of the projective plane over the field with p elements (p prime):
/// points 0..N-1, then lines N..2N-1 with N = p^2 + p + 1, each a normalised triple
/// (first nonzero coordinate 1) in lexicographic order. Throws "prime required".
Graph projective_graph(int p);

/// ceil(sqrt(2(p^2+p+1)(p+1)/(2p+1)) + 1/2).
int projective_lower_bound(int p);

/// Bounds computable for a concrete graph: the chromatic number (lower), the
/// edge bound when the graph is small enough to find ell exactly (n <= 16),
/// the upper bound above when k1 >= 2, and the exact value when n <= 12.
std::vector<BoundReport> bound_reports(const Graph& g, const PatternGraph& h);

}  // namespace hcolor
