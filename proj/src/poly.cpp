#include "hcolor/poly.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "hcolor/exact_solver.hpp"
#include "hcolor/pattern.hpp"

namespace hcolor {

Coloring k2k1_coloring(const Graph& g) {
    std::vector<int> colour(g.n(), -1);
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (colour[v] >= 0) continue;
        colour[v] = static_cast<int>(v);
        for (std::size_t u = v + 1; u < g.n(); ++u)
            if (colour[u] < 0 && g.neighbors(static_cast<int>(u)) == g.neighbors(static_cast<int>(v)))
                colour[u] = static_cast<int>(v);
    }
    return Coloring::from_assignment(colour);
}

Graph p3_closure(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    for (std::size_t w = 0; w < g.n(); ++w) {
        const auto nb = g.neighbors(static_cast<int>(w)).members();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j])) edges.emplace_back(nb[i], nb[j]);
    }
    return Graph(g.n(), edges);
}

int chi_p3_via_closure(const Graph& g) {
    return *chromatic_number(p3_closure(g), static_cast<int>(std::max<std::size_t>(g.n(), 1)));
}

std::optional<Coloring> decide_p3_at_most_3(const Graph& g) {
    if (g.max_degree() >= 3) return std::nullopt;
    std::vector<int> colour(g.n(), -1);
    for (const auto& comp : connected_components(g)) {
        std::size_t degree_sum = 0;
        for (int v : comp) degree_sum += g.degree(v);
        const bool is_cycle = degree_sum / 2 == comp.size();
        if (is_cycle && comp.size() % 3 != 0) return std::nullopt;
        int start = comp.front();
        if (!is_cycle)
            for (int v : comp)
                if (g.degree(v) <= 1) {
                    start = v;
                    break;
                }
        // Walk the path or cycle from `start`.
        int prev = -1, cur = start, step = 0;
        while (cur >= 0 && colour[static_cast<std::size_t>(cur)] < 0) {
            colour[static_cast<std::size_t>(cur)] = step++ % 3;
            int next = -1;
            g.neighbors(cur).for_each([&](int u) {
                if (u != prev && next < 0 && colour[static_cast<std::size_t>(u)] < 0) next = u;
            });
            prev = cur;
            cur = next;
        }
    }
    auto c = Coloring::from_assignment(colour);
    if (!is_avoiding_coloring(g, PatternGraph::named("P3"), c)) return std::nullopt;
    return c;
}

namespace {

/// Satisfiability of 2-CNF by strongly connected components of the implication graph.
class TwoSat {
public:
    explicit TwoSat(std::size_t vars) : n_(vars), implications_(2 * vars) {}

    static std::size_t lit(std::size_t var, bool value) { return 2 * var + (value ? 0 : 1); }

    /// Forbids var_a = a together with var_b = b.
    void forbid(std::size_t var_a, bool a, std::size_t var_b, bool b) {
        implications_[lit(var_a, a)].push_back(lit(var_b, !b));
        implications_[lit(var_b, b)].push_back(lit(var_a, !a));
    }

    std::optional<std::vector<bool>> solve() {
        const std::size_t m = 2 * n_;
        std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
        std::vector<bool> on_stack(m, false);
        std::vector<std::size_t> stack;
        int counter = 0, comps = 0;
        std::function<void(std::size_t)> strong = [&](std::size_t v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = true;
            for (std::size_t w : implications_[v]) {
                if (index[w] < 0) {
                    strong(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
        };
        for (std::size_t v = 0; v < m; ++v)
            if (index[v] < 0) strong(v);
        // Tarjan numbers components in reverse topological order.
        std::vector<bool> value(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const int t = comp[lit(i, true)], f = comp[lit(i, false)];
            if (t == f) return std::nullopt;
            value[i] = t < f;
        }
        return value;
    }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> implications_;
};

class ThreeClassSearch {
public:
    explicit ThreeClassSearch(const Graph& g) : g_(g), h_(PatternGraph::named("2K2")) {}

    std::optional<Coloring> run() {
        if (g_.n() == 0) return Coloring{};
        if (has_induced_matching(g_, 4)) return std::nullopt;
        auto mis = maximal_independent_sets(g_, kMisCap);
        if (!mis) throw std::logic_error("maximal independent set enumeration exceeded its cap");
        const VertexSet all = g_.all_vertices();
        const std::size_t m = mis->size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                for (std::size_t l = j; l < m; ++l) {
                    const auto& a = (*mis)[i];
                    const auto& b = (*mis)[j];
                    const auto& c = (*mis)[l];
                    if ((a | b | c) != all) continue;
                    if (auto found = configuration({a, b, c})) return found;
                }
        return std::nullopt;
    }

private:
    using Triple = std::array<VertexSet, 3>;

    bool pair_bad(const Triple& y, int c, int d) const {
        return detail::pair_contains(g_, y[static_cast<std::size_t>(c)], y[static_cast<std::size_t>(d)], h_);
    }

    /// Whether v (not yet placed) can join class c given the current classes.
    bool fits(Triple& y, int v, int c) const {
        auto& cls = y[static_cast<std::size_t>(c)];
        cls.insert(v);
        bool ok = true;
        for (int d = 0; d < 3 && ok; ++d)
            if (d != c) ok = !detail::pair_contains_through(g_, cls, y[static_cast<std::size_t>(d)], v, h_);
        cls.erase(v);
        return ok;
    }

    std::optional<Coloring> configuration(const Triple& x) const {
        const VertexSet isolated = x[0] & x[1] & x[2];
        Triple y;
        for (int c = 0; c < 3; ++c) y[c] = x[c] - (x[(c + 1) % 3] | x[(c + 2) % 3]);
        if (pair_bad(y, 0, 1) || pair_bad(y, 0, 2) || pair_bad(y, 1, 2)) return std::nullopt;

        // Undecided vertices with their two candidate classes (lower first).
        struct Choice {
            int v;
            int lo, hi;
        };
        std::vector<Choice> open;
        for (int c = 0; c < 3; ++c)
            for (int d = c + 1; d < 3; ++d)
                ((x[c] & x[d]) - isolated).for_each([&](int v) { open.push_back({v, c, d}); });

        // Forced moves to a fixpoint. Adding vertices only adds induced subgraphs,
        // so a vertex that cannot join a class now never can.
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Choice> still;
            for (const auto& ch : open) {
                const bool lo = fits(y, ch.v, ch.lo), hi = fits(y, ch.v, ch.hi);
                if (!lo && !hi) return std::nullopt;
                if (lo && hi) {
                    still.push_back(ch);
                    continue;
                }
                y[static_cast<std::size_t>(lo ? ch.lo : ch.hi)].insert(ch.v);
                changed = true;
            }
            open = std::move(still);
        }

        // Every remaining single placement is safe; a 2K2 meets at most two
        // undecided vertices (each edge of it has an end among the forced ones),
        // so forbidding bad pairs is exact.
        TwoSat sat(open.size());
        for (std::size_t p = 0; p < open.size(); ++p)
            for (std::size_t q = p + 1; q < open.size(); ++q)
                for (bool a : {true, false})
                    for (bool b : {true, false}) {
                        const int ca = a ? open[p].lo : open[p].hi;
                        const int cb = b ? open[q].lo : open[q].hi;
                        Triple t = y;
                        t[static_cast<std::size_t>(ca)].insert(open[p].v);
                        t[static_cast<std::size_t>(cb)].insert(open[q].v);
                        if (pair_bad(t, 0, 1) || pair_bad(t, 0, 2) || pair_bad(t, 1, 2)) sat.forbid(p, a, q, b);
                    }
        auto value = sat.solve();
        if (!value) return std::nullopt;
        for (std::size_t p = 0; p < open.size(); ++p)
            y[static_cast<std::size_t>((*value)[p] ? open[p].lo : open[p].hi)].insert(open[p].v);
        y[0] |= isolated;

        auto col = Coloring::from_classes(g_.n(), {y[0], y[1], y[2]});
        if (!is_avoiding_coloring(g_, h_, col)) return std::nullopt;
        return col;
    }

    const Graph& g_;
    PatternGraph h_;
};

}  // namespace

std::optional<Coloring> decide_2k2_at_most_3(const Graph& g) { return ThreeClassSearch(g).run(); }

}  // namespace hcolor
