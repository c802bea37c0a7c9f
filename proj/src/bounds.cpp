#include "hcolor/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "hcolor/exact_solver.hpp"

namespace hcolor {

namespace {

long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

int ceil_real(long double x) { return static_cast<int>(std::ceil(x)); }

long long choose2(long long k) { return k * (k - 1) / 2; }

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int path_ell(int n) { return (n - 1 + 2) / 3; }

}  // namespace

std::string_view bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        case BoundKind::exact: return "exact";
    }
    return "lower";
}

long long edge_bound_lower(long long edge_count, long long ell) {
    if (edge_count < 0) throw std::invalid_argument("edge count must be >= 0");
    if (ell < 0) throw std::invalid_argument("ell must be >= 0");
    if (ell == 0) {
        if (edge_count > 0) throw std::invalid_argument("no H-free subgraph can carry edges");
        return 1;
    }
    // Start from the real root 1/2 + sqrt(1/4 + 2e/ell) and settle it with integers.
    long long k = std::max(1LL, static_cast<long long>(std::floor(0.5L + std::sqrt(0.25L + 2.0L * edge_count / ell))) - 1);
    while (k > 1 && ell * choose2(k - 1) >= edge_count) --k;
    while (ell * choose2(k) < edge_count) ++k;
    return k;
}

BoundReport prop5_upper(long long n, long long chi, long long alpha, int k1, int k2) {
    if (k1 < 2) throw std::invalid_argument("k1 must be >= 2 (the bound divides by k1 - 1)");
    if (n < 1 || chi < 1 || alpha < 1) throw std::invalid_argument("n, chi and alpha must be >= 1");
    BoundReport r;
    r.kind = BoundKind::upper;
    r.inputs = {{"n", static_cast<double>(n)},
                {"chi", static_cast<double>(chi)},
                {"alpha", static_cast<double>(alpha)},
                {"k1", k1},
                {"k2", k2}};

    const long long t1 = ceil_div(n + (k1 - 2) * chi, k1 - 1);
    r.inputs["k1_term"] = (static_cast<double>(n) + (k1 - 2) * static_cast<double>(chi)) / (k1 - 1);
    r.name = "prop5_k1";
    r.value = t1;
    if (k2 >= 3) {
        const long long num = n * (chi - 1) + chi * (k2 - 2) * (chi - 1);
        const long long den = chi * (k2 - 1);
        const long long t2 = ceil_div(num, den) + 1;
        r.inputs["k2_term"] = static_cast<double>(num) / static_cast<double>(den) + 1.0;
        if (t2 < r.value) {
            r.value = t2;
            r.name = "prop5_k2";
        }
    } else if (k2 == 2) {
        const long long t2 = n - alpha + 1;
        r.inputs["alpha_term"] = static_cast<double>(t2);
        if (t2 < r.value) {
            r.value = t2;
            r.name = "prop5_alpha";
        }
    }
    return r;
}

long long longest_trail_edges(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return k % 2 == 1 ? choose2(k) : choose2(k) - k / 2 + 1;
}

std::vector<int> complete_graph_trail(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const auto K = static_cast<std::size_t>(k);
    std::vector<std::vector<bool>> free(K + 1, std::vector<bool>(K + 1, true));
    for (std::size_t v = 1; v <= K; ++v) free[v][v] = false;
    if (k % 2 == 0)
        for (std::size_t v = 2; v + 1 <= K - 1; v += 2) free[v][v + 1] = free[v + 1][v] = false;

    // Hierholzer: walk greedily, splice closed detours in when stuck.
    std::vector<int> stack{1}, trail;
    while (!stack.empty()) {
        const auto v = static_cast<std::size_t>(stack.back());
        std::size_t u = 1;
        while (u <= K && !free[v][u]) ++u;
        if (u > K) {
            trail.push_back(stack.back());
            stack.pop_back();
        } else {
            free[v][u] = free[u][v] = false;
            stack.push_back(static_cast<int>(u));
        }
    }
    std::reverse(trail.begin(), trail.end());
    return trail;
}

int chi_2k2_path(int n) {
    if (n < 2) throw std::invalid_argument("path needs n >= 2");
    const int ell = path_ell(n);
    int k = 2;
    while (longest_trail_edges(k) < ell) ++k;
    return k;
}

int chi_2k2_path_published(int n) {
    if (n < 2) throw std::invalid_argument("path needs n >= 2");
    const int ell = path_ell(n);
    int k = 2;
    while ((k + 1) / 2 * (k - 2) < ell) ++k;
    return k;
}

Coloring eulerian_path_coloring(int n) {
    const int k = chi_2k2_path(n);
    const auto trail = complete_graph_trail(k);
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        int i = 0;
        switch (v % 3) {
            case 0: i = v / 3; break;
            case 1: i = (v + 2) / 3; break;
            default: i = (v + 4) / 3; break;
        }
        colour[static_cast<std::size_t>(v - 1)] = trail.at(static_cast<std::size_t>(i - 1)) - 1;
    }
    return Coloring::from_assignment(colour);
}

int chi_2k2_matching(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("matching needs an even n >= 2");
    return ceil_real(std::sqrt(static_cast<long double>(n) + 0.25L) + 0.5L);
}

Coloring matching_witness(int n) {
    const int k = chi_2k2_matching(n);
    std::vector<int> colour;
    for (int a = 0; a < k && static_cast<int>(colour.size()) < n; ++a)
        for (int b = a + 1; b < k && static_cast<int>(colour.size()) < n; ++b) {
            colour.push_back(a);
            colour.push_back(b);
        }
    if (static_cast<int>(colour.size()) < n) throw std::logic_error("too few colour pairs for the matching");
    return Coloring::from_assignment(colour);
}

int chi_2k2_subdivided_star(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("subdivided star needs an odd n >= 3");
    return ceil_real(std::sqrt(static_cast<long double>(n) - 0.75L) + 0.5L);
}

int cube_lower_bound(int d) {
    if (d < 2) throw std::invalid_argument("cube dimension must be >= 2");
    if (d == 2) return 2;
    if (d == 3) return 4;
    const long double x = static_cast<long double>(d) / (2.0L * d - 1.0L) * std::ldexp(1.0L, d);
    return ceil_real(std::sqrt(x) + 0.5L);
}

Graph projective_graph(int p) {
    if (!is_prime(p)) throw std::invalid_argument("prime required (got " + std::to_string(p) + ")");
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                const int lead = a != 0 ? a : b != 0 ? b : c;
                if (lead == 1) triples.push_back({a, b, c});
            }
    const std::size_t count = triples.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            const auto& x = triples[i];
            const auto& y = triples[j];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % p == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(count + j));
        }
    Graph g(2 * count, edges);
    for (std::size_t v = 0; v < g.n(); ++v)
        if (g.degree(static_cast<int>(v)) != static_cast<std::size_t>(p + 1))
            throw std::logic_error("projective incidence graph is not regular");
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = u + 1; v < g.n(); ++v)
            if (g.neighbors(static_cast<int>(u)).intersection_count(g.neighbors(static_cast<int>(v))) > 1)
                throw std::logic_error("projective incidence graph contains K2,2");
    return g;
}

int projective_lower_bound(int p) {
    if (!is_prime(p)) throw std::invalid_argument("prime required (got " + std::to_string(p) + ")");
    const long double pp = p;
    const long double x = 2.0L * (pp * pp + pp + 1.0L) * (pp + 1.0L) / (2.0L * pp + 1.0L);
    return ceil_real(std::sqrt(x) + 0.5L);
}

namespace {

/// Largest edge count of an induced subgraph that could sit between two colour
/// classes: bipartite and free of induced H.
long long max_h_free_bipartite_edges(const Graph& g, const PatternGraph& h) {
    const std::size_t n = g.n();
    long long best = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1U) s.insert(static_cast<int>(v));
        const auto sub = induced_subgraph(g, s).graph;
        if (static_cast<long long>(sub.edge_count()) <= best) continue;
        if (!bipartition(sub)) continue;
        if (contains_induced(sub, h.graph())) continue;
        best = static_cast<long long>(sub.edge_count());
    }
    return best;
}

}  // namespace

std::vector<BoundReport> bound_reports(const Graph& g, const PatternGraph& h) {
    std::vector<BoundReport> out;
    const long long n = static_cast<long long>(g.n());
    if (n == 0) return out;
    const long long chi = *chromatic_number(g, static_cast<int>(n));
    const long long alpha = independence_number(g);

    out.push_back({"chromatic_number", BoundKind::lower, chi, {{"chi", static_cast<double>(chi)}}});
    if (n <= 16) {
        const long long ell = max_h_free_bipartite_edges(g, h);
        const long long e = static_cast<long long>(g.edge_count());
        if (ell > 0 || e == 0)
            out.push_back({"edge_bound",
                           BoundKind::lower,
                           edge_bound_lower(e, ell),
                           {{"edges", static_cast<double>(e)}, {"ell", static_cast<double>(ell)}}});
    }
    if (h.k1() >= 2) out.push_back(prop5_upper(n, chi, alpha, h.k1(), h.k2()));
    if (n <= 12) {
        try {
            const auto exact = chi_H(g, h);
            out.push_back({"exact", BoundKind::exact, exact.value, {{"nodes", static_cast<double>(exact.nodes_explored)}}});
        } catch (const NoAvoidingColoring&) {
        }
    }
    return out;
}

}  // namespace hcolor
