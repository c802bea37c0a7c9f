#include "hcolor/reductions.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "hcolor/exact_solver.hpp"
#include "hcolor/graph_io.hpp"
#include "hcolor/pattern.hpp"

namespace hcolor {

Hypergraph3::Hypergraph3(std::size_t n, std::vector<HyperEdge> edges) : n_(n), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        for (int v : e)
            if (v < 0 || static_cast<std::size_t>(v) >= n_)
                throw std::invalid_argument("hyperedge vertex " + std::to_string(v) + " outside 0.." +
                                            std::to_string(n_) + "-1");
        if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2])
            throw std::invalid_argument("hyperedge repeats a vertex");
    }
}

Hypergraph3 Hypergraph3::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    bool header = false;
    long long n = 0, m = 0;
    std::vector<HyperEdge> edges;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string extra;
        if (!header) {
            if (!(fields >> n >> m) || (fields >> extra) || n < 0 || m < 0)
                throw ParseError(number, "expected header \"n m\"");
            header = true;
            continue;
        }
        HyperEdge e{};
        if (!(fields >> e[0] >> e[1] >> e[2]) || (fields >> extra))
            throw ParseError(number, "expected three vertex ids");
        edges.push_back(e);
    }
    if (!header) throw ParseError(number, "missing header \"n m\"");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(number, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    try {
        return Hypergraph3(static_cast<std::size_t>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(number, e.what());
    }
}

std::optional<std::vector<int>> hypergraph_2colorable(const Hypergraph3& t) {
    if (t.n() > kHypergraphBruteForceMax)
        throw std::invalid_argument("hypergraph_2colorable refuses more than " +
                                    std::to_string(kHypergraphBruteForceMax) + " vertices");
    const std::uint32_t total = 1U << t.n();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const auto& e : t.edges()) {
            const auto b0 = mask >> e[0] & 1U, b1 = mask >> e[1] & 1U, b2 = mask >> e[2] & 1U;
            if (b0 == b1 && b1 == b2) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<int> colour(t.n());
        for (std::size_t v = 0; v < t.n(); ++v) colour[v] = static_cast<int>(mask >> v & 1U);
        return colour;
    }
    return std::nullopt;
}

Graph reduce_to_p3(const Hypergraph3& t) {
    const int n = static_cast<int>(t.n()), m = static_cast<int>(t.m());
    if (n < 1 || m < 1) throw std::invalid_argument("reduce_to_p3 needs n >= 1 and at least one edge");
    auto pv = [&](int i, int j, int k) { return 5 * (i * m + j) + k; };
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < 5; ++k) edges.emplace_back(pv(i, j, k), pv(i, j, (k + 1) % 5));
    // Third and fourth vertices feed the first vertex of the next pentagon down the column.
    for (int j = 0; j < m; ++j)
        for (int i = 0; i + 1 < n; ++i) {
            edges.emplace_back(pv(i, j, 2), pv(i + 1, j, 0));
            edges.emplace_back(pv(i, j, 3), pv(i + 1, j, 0));
        }
    // The last row wraps to the top of the next column.
    for (int j = 0; j + 1 < m; ++j) {
        edges.emplace_back(pv(n - 1, j, 2), pv(0, j + 1, 0));
        edges.emplace_back(pv(n - 1, j, 3), pv(0, j + 1, 0));
    }
    // Fourth vertex to the second vertex of the pentagon to the right.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < m; ++j) edges.emplace_back(pv(i, j, 3), pv(i, j + 1, 1));
    const int base = 5 * n * m;
    for (int l = 0; l < m; ++l) {
        const int centre = base + 4 * l;
        const auto& e = t.edges()[static_cast<std::size_t>(l)];
        for (int s = 0; s < 3; ++s) {
            edges.emplace_back(centre, centre + 1 + s);
            edges.emplace_back(centre + 1 + s, pv(e[static_cast<std::size_t>(s)], l, 4));
        }
    }
    return Graph(static_cast<std::size_t>(base + 4 * m), edges);
}

namespace {

enum GadgetSlot { A1, B1, C1, A2, B2, C2, A3, B3, C3, W1, W2 };

int gadget_base(std::size_t n, std::size_t l) { return static_cast<int>(2 * n + 1 + 11 * l); }

}  // namespace

Graph reduce_to_p4(const Hypergraph3& t) {
    const std::size_t n = t.n();
    if (n < 4) throw std::invalid_argument("reduce_to_p4 needs n >= 4 (proof precondition)");
    if (t.m() < 1) throw std::invalid_argument("reduce_to_p4 needs at least one edge");
    const int z = static_cast<int>(2 * n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const int x = static_cast<int>(i), xp = static_cast<int>(n + i);
        edges.emplace_back(x, xp);
        edges.emplace_back(z, x);
        edges.emplace_back(z, xp);
    }
    for (std::size_t l = 0; l < t.m(); ++l) {
        const int g = gadget_base(n, l);
        for (int path = 0; path < 3; ++path) {
            edges.emplace_back(g + 3 * path, g + 3 * path + 1);
            edges.emplace_back(g + 3 * path + 1, g + 3 * path + 2);
        }
        edges.emplace_back(g + C1, g + W1);
        edges.emplace_back(g + C2, g + W1);
        edges.emplace_back(g + C2, g + W2);
        edges.emplace_back(g + C3, g + W2);
        const auto& e = t.edges()[l];
        edges.emplace_back(g + A1, e[0]);
        edges.emplace_back(g + A2, e[1]);
        edges.emplace_back(g + A3, e[2]);
    }
    return Graph(2 * n + 1 + 11 * t.m(), edges);
}

Coloring lift_coloring_p4(const Hypergraph3& t, const std::vector<int>& hcol) {
    const std::size_t n = t.n();
    if (hcol.size() != n) throw std::invalid_argument("hypergraph colouring has the wrong length");
    for (int c : hcol)
        if (c != 0 && c != 1) throw std::invalid_argument("hypergraph colouring entries must be 0 or 1");
    const Graph g = reduce_to_p4(t);
    std::vector<int> colour(g.n(), -1);
    // Graph colours 1 and 2 mirror the hypergraph colours, 3 is the insulating colour.
    for (std::size_t i = 0; i < n; ++i) {
        colour[i] = hcol[i] + 1;
        colour[n + i] = 3 - colour[i];
    }
    colour[2 * n] = 3;
    for (std::size_t l = 0; l < t.m(); ++l) {
        const auto& e = t.edges()[l];
        const int cp = hcol[static_cast<std::size_t>(e[0])] + 1;
        const int cq = hcol[static_cast<std::size_t>(e[1])] + 1;
        const int cr = hcol[static_cast<std::size_t>(e[2])] + 1;
        if (cp == cq && cq == cr) throw std::invalid_argument("hypergraph colouring is not proper");
        std::array<int, 11> slot{};
        slot[B1] = slot[B2] = slot[B3] = slot[W1] = 3;
        if (cq == cr || cp == cq) {
            // The odd one out sits at an end; normalise it to position p.
            const bool at_p = cq == cr;
            const int major = at_p ? cq : cp, minor = 3 - major;
            int a1 = A1, c1 = C1, a3 = A3, c3 = C3, w2 = W2, w1 = W1;
            if (!at_p) {
                std::swap(a1, a3);
                std::swap(c1, c3);
                std::swap(w1, w2);
            }
            slot[static_cast<std::size_t>(w1)] = 3;
            slot[static_cast<std::size_t>(a1)] = slot[C2] = slot[static_cast<std::size_t>(c3)] = major;
            slot[static_cast<std::size_t>(c1)] = slot[A2] = slot[static_cast<std::size_t>(a3)] =
                slot[static_cast<std::size_t>(w2)] = minor;
        } else {
            // Odd one out in the middle.
            const int major = cp, minor = cq;
            slot[C1] = slot[A2] = slot[C3] = major;
            slot[A1] = slot[C2] = slot[A3] = minor;
            slot[W2] = 3;
        }
        const int base = gadget_base(n, l);
        for (std::size_t s = 0; s < slot.size(); ++s) colour[static_cast<std::size_t>(base) + s] = slot[s];
    }
    auto c = Coloring::from_assignment(colour);
    if (!is_avoiding_coloring(g, PatternGraph::named("P4"), c))
        throw std::logic_error("lifted colouring is not P4-avoiding");
    return c;
}

}  // namespace hcolor
