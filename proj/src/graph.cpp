#include "hcolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace hcolor {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) {
    if (n > kMaxVertices)
        throw std::invalid_argument("graph has " + std::to_string(n) + " vertices; limit is " +
                                    std::to_string(kMaxVertices));
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint outside 0.." + std::to_string(n) + "-1");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.count();
    edge_count_ = twice / 2;
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.count());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < n(); ++u)
        adj_[u].for_each([&](int v) {
            if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<int>(u), v);
        });
    return out;
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n(); ++u)
        for (std::size_t v = u + 1; v < n(); ++v)
            if (!adj_[u].contains(static_cast<int>(v))) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph(n(), out);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.original_ids = s.members();
    if (!out.original_ids.empty() && static_cast<std::size_t>(out.original_ids.back()) >= g.n())
        throw std::out_of_range("vertex " + std::to_string(out.original_ids.back()) + " is not in the graph");
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < out.original_ids.size(); ++i) local[static_cast<std::size_t>(out.original_ids[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.original_ids.size(); ++i) {
        int u = out.original_ids[i];
        g.neighbors(u).for_each([&](int v) {
            if (v > u && local[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(static_cast<int>(i), local[static_cast<std::size_t>(v)]);
        });
    }
    out.graph = Graph(out.original_ids.size(), edges);
    return out;
}

namespace {

std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

}  // namespace

std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h) {
    const std::size_t hn = h.n();
    if (hn > g.n()) return std::nullopt;
    if (hn == 0) return VertexMap{};
    const auto order = degree_order(h);
    VertexMap map(hn, -1);
    VertexSet used(g.n());

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == hn) return true;
        const int hv = order[i];
        const std::size_t need = h.degree(hv);
        for (int gv = 0; gv < static_cast<int>(g.n()); ++gv) {
            if (used.contains(gv) || g.degree(gv) < need) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const int hp = order[j];
                ok = h.adjacent(hv, hp) == g.adjacent(gv, map[static_cast<std::size_t>(hp)]);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(hv)] = gv;
            used.insert(gv);
            if (place(i + 1)) return true;
            used.erase(gv);
            map[static_cast<std::size_t>(hv)] = -1;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

int greedy_clique_size(const Graph& g) {
    if (g.n() == 0) return 0;
    const auto order = degree_order(g);
    int best = 1;
    for (int start : order) {
        VertexSet cand = g.neighbors(start);
        int size = 1;
        for (int v : order) {
            if (!cand.contains(v)) continue;
            ++size;
            cand &= g.neighbors(v);
        }
        best = std::max(best, size);
    }
    return best;
}

namespace {

/// k-colourability by backtracking; a vertex may open at most one new colour.
bool colour_with(const Graph& g, int k, const std::vector<int>& order, std::vector<int>& colour) {
    std::vector<VertexSet> classes(static_cast<std::size_t>(k), VertexSet(g.n()));
    colour.assign(g.n(), -1);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) -> bool {
        if (i == order.size()) return true;
        const int v = order[i];
        for (int c = 0; c < used; ++c) {
            if (g.neighbors(v).intersects(classes[static_cast<std::size_t>(c)])) continue;
            classes[static_cast<std::size_t>(c)].insert(v);
            colour[static_cast<std::size_t>(v)] = c;
            if (rec(i + 1, used)) return true;
            classes[static_cast<std::size_t>(c)].erase(v);
        }
        if (used < k) {
            classes[static_cast<std::size_t>(used)].insert(v);
            colour[static_cast<std::size_t>(v)] = used;
            if (rec(i + 1, used + 1)) return true;
            classes[static_cast<std::size_t>(used)].erase(v);
        }
        colour[static_cast<std::size_t>(v)] = -1;
        return false;
    };
    return rec(0, 0);
}

}  // namespace

std::optional<int> chromatic_number(const Graph& g, int limit) {
    if (limit < 1) throw std::invalid_argument("chromatic_number: limit must be >= 1");
    if (g.n() == 0) return 0;
    const auto order = degree_order(g);
    std::vector<int> colour;
    for (int k = std::max(1, greedy_clique_size(g)); k <= limit; ++k)
        if (colour_with(g, k, order, colour)) return k;
    return std::nullopt;
}

std::vector<int> optimal_proper_coloring(const Graph& g) {
    if (g.n() == 0) return {};
    const auto order = degree_order(g);
    std::vector<int> colour;
    for (int k = std::max(1, greedy_clique_size(g));; ++k)
        if (colour_with(g, k, order, colour)) return colour;
}

int independence_number(const Graph& g) {
    const Graph co = g.complement();
    int best = 0;
    std::function<void(VertexSet, int)> expand = [&](VertexSet cand, int size) {
        if (cand.empty()) {
            best = std::max(best, size);
            return;
        }
        while (!cand.empty()) {
            if (size + static_cast<int>(cand.count()) <= best) return;
            const int v = cand.first();
            cand.erase(v);
            expand(cand & co.neighbors(v), size + 1);
        }
    };
    expand(g.all_vertices(), 0);
    return best;
}

std::optional<std::vector<VertexSet>> maximal_independent_sets(const Graph& g, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("maximal_independent_sets: cap must be >= 1");
    const Graph co = g.complement();
    std::vector<VertexSet> found;
    bool overflow = false;

    // Bron-Kerbosch with pivoting on the complement: cliques there are independent sets here.
    std::function<void(VertexSet&, VertexSet, VertexSet)> bk = [&](VertexSet& r, VertexSet p, VertexSet x) {
        if (overflow) return;
        if (p.empty() && x.empty()) {
            if (found.size() == cap) {
                overflow = true;
                return;
            }
            found.push_back(r);
            return;
        }
        int pivot = -1;
        std::size_t best = 0;
        (p | x).for_each([&](int u) {
            std::size_t c = p.intersection_count(co.neighbors(u));
            if (pivot < 0 || c > best) {
                pivot = u;
                best = c;
            }
        });
        const VertexSet branch = p - co.neighbors(pivot);
        branch.for_each([&](int v) {
            if (overflow) return;
            r.insert(v);
            bk(r, p & co.neighbors(v), x & co.neighbors(v));
            r.erase(v);
            p.erase(v);
            x.insert(v);
        });
    };
    VertexSet r(g.n());
    bk(r, g.all_vertices(), VertexSet(g.n()));
    if (overflow) return std::nullopt;
    std::sort(found.begin(), found.end());
    return found;
}

bool has_induced_matching(const Graph& g, int size) {
    if (size <= 0) return true;
    const auto edges = g.edges();
    std::vector<VertexSet> blocked;
    blocked.reserve(edges.size());
    for (auto [u, v] : edges) {
        VertexSet b = g.neighbors(u) | g.neighbors(v);
        b.insert(u);
        b.insert(v);
        blocked.push_back(std::move(b));
    }
    VertexSet forbidden(g.n());
    std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int left) -> bool {
        if (left == 0) return true;
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (forbidden.contains(u) || forbidden.contains(v)) continue;
            VertexSet saved = forbidden;
            forbidden |= blocked[i];
            if (rec(i + 1, left - 1)) return true;
            forbidden = std::move(saved);
        }
        return false;
    };
    return rec(0, size);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < static_cast<int>(g.n()); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out.back().push_back(u);
            g.neighbors(u).for_each([&](int v) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = id;
                    q.push(v);
                }
            });
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < static_cast<int>(g.n()); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            bool clash = false;
            g.neighbors(u).for_each([&](int v) {
                auto& sv = side[static_cast<std::size_t>(v)];
                if (sv < 0) {
                    sv = 1 - side[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (sv == side[static_cast<std::size_t>(u)]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    return side;
}

}  // namespace hcolor
