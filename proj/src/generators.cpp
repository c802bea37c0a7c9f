#include "hcolor/generators.hpp"

#include <stdexcept>

namespace hcolor::gen {

Graph empty(std::size_t n) { return Graph(n, {}); }

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph(n, e);
}

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(static_cast<int>(v - 1), static_cast<int>(v));
    return Graph(n, e);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t v = 0; v < n; ++v) e.emplace_back(static_cast<int>(v), static_cast<int>((v + 1) % n));
    return Graph(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v) e.emplace_back(static_cast<int>(u), static_cast<int>(a + v));
    return Graph(a + b, e);
}

Graph matching(std::size_t edges) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < edges; ++i) e.emplace_back(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
    return Graph(2 * edges, e);
}

Graph hypercube(int d) {
    if (d < 0 || d > 12) throw std::invalid_argument("hypercube dimension must be in 0..12");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> e;
    for (std::size_t v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            std::size_t w = v ^ (std::size_t{1} << b);
            if (v < w) e.emplace_back(static_cast<int>(v), static_cast<int>(w));
        }
    return Graph(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, e);
}

Graph subdivided_star(std::size_t legs) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < legs; ++i) {
        int mid = static_cast<int>(2 * i + 1);
        e.emplace_back(0, mid);
        e.emplace_back(mid, mid + 1);
    }
    return Graph(2 * legs + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    const int shift = static_cast<int>(a.n());
    for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
    return Graph(a.n() + b.n(), e);
}

}  // namespace hcolor::gen
