#include "hcolor/pattern.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hcolor {

namespace {

struct NamedPattern {
    PatternTag tag;
    std::string_view token;
    std::size_t n;
    std::vector<Edge> edges;
};

const std::array<NamedPattern, 6>& named_patterns() {
    static const std::array<NamedPattern, 6> table{{
        {PatternTag::K1pK1, "K1+K1", 2, {}},
        {PatternTag::K2, "K2", 2, {{0, 1}}},
        {PatternTag::K2pK1, "K2+K1", 3, {{0, 1}}},
        {PatternTag::P3, "P3", 3, {{0, 1}, {1, 2}}},
        {PatternTag::P4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
        {PatternTag::TwoK2, "2K2", 4, {{0, 1}, {2, 3}}},
    }};
    return table;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edge_count() == b.edge_count() && contains_induced(a, b).has_value();
}

PatternTag classify(const Graph& h) {
    for (const auto& p : named_patterns())
        if (isomorphic(h, Graph(p.n, p.edges))) return p.tag;
    return PatternTag::Custom;
}

// Neighbourhood of a restricted to `side` equals / contains that of b.
bool same_within(const Graph& g, int a, int b, const VertexSet& side) {
    return g.neighbors(a).is_subset_of_within(g.neighbors(b), side) &&
           g.neighbors(b).is_subset_of_within(g.neighbors(a), side);
}

bool incomparable_within(const Graph& g, int a, int b, const VertexSet& side) {
    return !g.neighbors(a).is_subset_of_within(g.neighbors(b), side) &&
           !g.neighbors(b).is_subset_of_within(g.neighbors(a), side);
}

bool generic_contains(const Graph& g, const VertexSet& a, const VertexSet& b, const PatternGraph& h) {
    auto sub = induced_subgraph(g, a | b);
    return contains_induced(sub.graph, h.graph()).has_value();
}

}  // namespace

std::string_view tag_token(PatternTag tag) {
    for (const auto& p : named_patterns())
        if (p.tag == tag) return p.token;
    return "custom";
}

BipartitionBounds compute_k1_k2(const Graph& h) {
    auto sides = bipartition(h);
    if (!sides) throw std::invalid_argument("pattern must be bipartite");
    std::vector<std::pair<int, int>> parts;
    for (const auto& comp : connected_components(h)) {
        int zero = 0;
        for (int v : comp) zero += (*sides)[static_cast<std::size_t>(v)] == 0;
        parts.emplace_back(zero, static_cast<int>(comp.size()) - zero);
    }
    if (parts.size() > 24) throw std::invalid_argument("pattern has too many components to enumerate bipartitions");
    BipartitionBounds best{static_cast<int>(h.n()), static_cast<int>(h.n())};
    const std::size_t total = std::size_t{1} << parts.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        int left = 0, right = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            bool swap = (mask >> c) & 1U;
            left += swap ? parts[c].second : parts[c].first;
            right += swap ? parts[c].first : parts[c].second;
        }
        best.k1 = std::min(best.k1, std::max(left, right));
        best.k2 = std::min(best.k2, std::min(left, right));
    }
    return best;
}

PatternGraph::PatternGraph(Graph h) : graph_(std::move(h)) {
    bounds_ = compute_k1_k2(graph_);
    tag_ = classify(graph_);
}

PatternGraph PatternGraph::named(std::string_view token) {
    for (const auto& p : named_patterns())
        if (p.token == token) return PatternGraph(Graph(p.n, p.edges));
    throw std::invalid_argument("unknown pattern '" + std::string(token) + "'");
}

PatternGraph PatternGraph::from_tag(PatternTag tag) {
    if (tag == PatternTag::Custom) throw std::invalid_argument("custom patterns need a graph");
    return named(tag_token(tag));
}

std::string PatternGraph::name() const {
    if (tag_ != PatternTag::Custom) return std::string(tag_token(tag_));
    return "custom(n=" + std::to_string(graph_.n()) + ",m=" + std::to_string(graph_.edge_count()) + ")";
}

PatternGraph PatternGraph::as_custom() const {
    PatternGraph copy = *this;
    copy.tag_ = PatternTag::Custom;
    return copy;
}

namespace detail {

bool pair_contains(const Graph& g, const VertexSet& a, const VertexSet& b, const PatternGraph& h) {
    switch (h.tag()) {
        case PatternTag::K1pK1: {
            const std::size_t ca = a.count(), cb = b.count();
            if (ca >= 2 || cb >= 2) return true;
            if (ca == 1 && cb == 1) return !g.adjacent(a.first(), b.first());
            return false;
        }
        case PatternTag::K2: {
            bool any = false;
            a.for_each([&](int x) { any = any || g.neighbors(x).intersects(b); });
            return any;
        }
        case PatternTag::K2pK1: {
            // Some edge, and the bipartite graph between A and B is not complete.
            std::size_t edges = 0;
            a.for_each([&](int x) { edges += g.neighbors(x).intersection_count(b); });
            return edges > 0 && edges < a.count() * b.count();
        }
        case PatternTag::P3: {
            bool found = false;
            a.for_each([&](int x) { found = found || g.neighbors(x).intersection_count(b) >= 2; });
            b.for_each([&](int y) { found = found || g.neighbors(y).intersection_count(a) >= 2; });
            return found;
        }
        case PatternTag::P4: {
            // a - y - a' - y': a common neighbour and unequal neighbourhoods into B.
            const auto as = a.members();
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = i + 1; j < as.size(); ++j)
                    if (g.neighbors(as[i]).intersects_within(g.neighbors(as[j]), b) &&
                        !same_within(g, as[i], as[j], b))
                        return true;
            return false;
        }
        case PatternTag::TwoK2: {
            // Two A-vertices whose neighbourhoods into B are inclusion-incomparable.
            const auto as = a.members();
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = i + 1; j < as.size(); ++j)
                    if (incomparable_within(g, as[i], as[j], b)) return true;
            return false;
        }
        case PatternTag::Custom: return generic_contains(g, a, b, h);
    }
    return generic_contains(g, a, b, h);
}

bool pair_contains_through(const Graph& g, const VertexSet& a, const VertexSet& b, int v, const PatternGraph& h) {
    const VertexSet& nv = g.neighbors(v);
    switch (h.tag()) {
        case PatternTag::K1pK1: return a.count() >= 2 || !b.is_subset_of(nv);
        case PatternTag::K2: return nv.intersects(b);
        case PatternTag::K2pK1: {
            const bool v_has_edge = nv.intersects(b);
            const bool v_full = b.is_subset_of(nv);
            if (v_has_edge && !v_full) return true;
            bool found = false;
            a.for_each([&](int x) {
                if (found || x == v) return;
                const VertexSet& nx = g.neighbors(x);
                // v-y with x missing y (v full to B, so any miss works)
                if (v_has_edge && !b.is_subset_of(nx)) found = true;
                // x-y with v missing y
                if (!nx.is_subset_of_within(nv, b)) found = true;
            });
            return found;
        }
        case PatternTag::P3: {
            if (nv.intersection_count(b) >= 2) return true;
            bool found = false;
            b.for_each([&](int y) {
                if (!found && nv.contains(y)) found = g.neighbors(y).intersection_count(a) >= 2;
            });
            return found;
        }
        case PatternTag::P4: {
            bool found = false;
            a.for_each([&](int x) {
                if (!found && x != v && nv.intersects_within(g.neighbors(x), b) && !same_within(g, v, x, b))
                    found = true;
            });
            return found;
        }
        case PatternTag::TwoK2: {
            bool found = false;
            a.for_each([&](int x) {
                if (!found && x != v && incomparable_within(g, v, x, b)) found = true;
            });
            return found;
        }
        case PatternTag::Custom: return generic_contains(g, a, b, h);
    }
    return generic_contains(g, a, b, h);
}

}  // namespace detail

bool pair_is_H_free(const Graph& g, const VertexSet& a, const VertexSet& b, const PatternGraph& h) {
    if (a.universe() != g.n() || b.universe() != g.n())
        throw std::invalid_argument("vertex sets must range over the graph's vertices");
    if (a.intersects(b)) throw std::invalid_argument("colour classes must be disjoint");
    auto independent = [&](const VertexSet& s) {
        bool ok = true;
        s.for_each([&](int x) { ok = ok && !g.neighbors(x).intersects(s); });
        return ok;
    };
    if (!independent(a) || !independent(b)) throw std::invalid_argument("colour classes must be independent sets");
    return !detail::pair_contains(g, a, b, h);
}

}  // namespace hcolor
