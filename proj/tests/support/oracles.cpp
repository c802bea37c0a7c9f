#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

Matrix to_matrix(const hcolor::Graph& g) {
    Matrix m(g.n(), std::vector<bool>(g.n(), false));
    for (auto [u, v] : g.edges()) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    return m;
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

const std::vector<hcolor::Graph>& catalog(int n) {
    static std::map<int, std::vector<hcolor::Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const auto pairs = all_pairs(n);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        pair_index[static_cast<std::size_t>(pairs[e].first)][static_cast<std::size_t>(pairs[e].second)] = static_cast<int>(e);
        pair_index[static_cast<std::size_t>(pairs[e].second)][static_cast<std::size_t>(pairs[e].first)] = static_cast<int>(e);
    }
    // Up to 6 vertices every labelled graph is scanned; beyond that each graph
    // on n-1 vertices is extended by a new vertex in every possible way.
    std::vector<std::uint32_t> candidates;
    if (n <= 6) {
        candidates.resize(std::size_t{1} << pairs.size());
        std::iota(candidates.begin(), candidates.end(), 0U);
    } else {
        for (const auto& small : catalog(n - 1)) {
            std::uint32_t base = 0;
            for (auto [u, v] : small.edges()) base |= 1U << pair_index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb) {
                std::uint32_t mask = base;
                for (int u = 0; u < n - 1; ++u)
                    if (nb >> u & 1U) mask |= 1U << pair_index[static_cast<std::size_t>(u)][static_cast<std::size_t>(n - 1)];
                candidates.push_back(mask);
            }
        }
    }
    std::set<std::uint32_t> seen;
    std::vector<hcolor::Graph> out;
    for (std::uint32_t mask : candidates) {
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t img = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1U)
                    img |= 1U << pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[e].first)])]
                                           [static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[e].second)])];
            canon = std::min(canon, img);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<hcolor::Edge> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (canon >> e & 1U) edges.push_back(pairs[e]);
        out.emplace_back(static_cast<std::size_t>(n), edges);
    }
    return cache[n] = std::move(out);
}

bool has_induced_copy(const Matrix& g, const Matrix& h) {
    const int n = static_cast<int>(g.size()), k = static_cast<int>(h.size());
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        std::vector<int> image = subset;
        do {
            bool match = true;
            for (int a = 0; a < k && match; ++a)
                for (int b = a + 1; b < k && match; ++b)
                    match = h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                            g[static_cast<std::size_t>(image[static_cast<std::size_t>(a)])]
                             [static_cast<std::size_t>(image[static_cast<std::size_t>(b)])];
            if (match) return true;
        } while (std::next_permutation(image.begin(), image.end()));
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool has_induced_copy(const hcolor::Graph& g, const hcolor::Graph& h) { return has_induced_copy(to_matrix(g), to_matrix(h)); }

int chromatic_number(const hcolor::Graph& g) {
    const auto m = to_matrix(g);
    const int n = static_cast<int>(g.n());
    int best = n;
    for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks >= best) return;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && rgs[static_cast<std::size_t>(u)] == rgs[static_cast<std::size_t>(v)]) return;
        best = blocks;
    });
    return best;
}

bool avoiding(const hcolor::Graph& g, const hcolor::Graph& h, const std::vector<int>& blocks, int count) {
    const auto m = to_matrix(g);
    const auto hm = to_matrix(h);
    const int n = static_cast<int>(g.n());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && blocks[static_cast<std::size_t>(u)] == blocks[static_cast<std::size_t>(v)]) return false;
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (blocks[static_cast<std::size_t>(v)] == a || blocks[static_cast<std::size_t>(v)] == b) members.push_back(v);
            Matrix sub(members.size(), std::vector<bool>(members.size()));
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j)
                    sub[i][j] = m[static_cast<std::size_t>(members[i])][static_cast<std::size_t>(members[j])];
            if (has_induced_copy(sub, hm)) return false;
        }
    return true;
}

int min_avoiding(const hcolor::Graph& g, const hcolor::Graph& h) {
    int best = -1;
    for_each_partition(static_cast<int>(g.n()), [&](const std::vector<int>& rgs, int blocks) {
        if (best >= 0 && blocks >= best) return;
        if (avoiding(g, h, rgs, blocks)) best = blocks;
    });
    return best;
}

std::vector<std::vector<int>> optimal_avoiding_partitions(const hcolor::Graph& g, const hcolor::Graph& h) {
    const int best = min_avoiding(g, h);
    std::vector<std::vector<int>> out;
    for_each_partition(static_cast<int>(g.n()), [&](const std::vector<int>& rgs, int blocks) {
        if (blocks == best && avoiding(g, h, rgs, blocks)) out.push_back(rgs);
    });
    return out;
}

bool columns_conflict(std::uint32_t a, std::uint32_t b, int rows) {
    for (int y = 0; y < rows; ++y)
        for (int y2 = 0; y2 < rows; ++y2) {
            if (y == y2) continue;
            const bool ay = a >> y & 1U, by2 = b >> y2 & 1U, ay2 = a >> y2 & 1U, by = b >> y & 1U;
            if (ay && by2 && !ay2 && !by) return true;
        }
    return false;
}

int min_nested_partition(const std::vector<std::uint32_t>& columns, int rows) {
    const int x = static_cast<int>(columns.size());
    if (x == 0) return 0;
    int best = x;
    for_each_partition(x, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks >= best) return;
        for (int i = 0; i < x; ++i)
            for (int j = i + 1; j < x; ++j)
                if (rgs[static_cast<std::size_t>(i)] == rgs[static_cast<std::size_t>(j)] &&
                    columns_conflict(columns[static_cast<std::size_t>(i)], columns[static_cast<std::size_t>(j)], rows))
                    return;
        best = blocks;
    });
    return best;
}

hcolor::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<hcolor::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return hcolor::Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace oracle
