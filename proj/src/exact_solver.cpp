#include "hcolor/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace hcolor {

bool is_avoiding_coloring(const Graph& g, const PatternGraph& h, const Coloring& c) {
    if (c.n() != g.n())
        throw std::invalid_argument("colouring covers " + std::to_string(c.n()) + " vertices, graph has " +
                                    std::to_string(g.n()));
    if (!is_proper(g, c)) return false;
    const auto classes = c.classes();
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (detail::pair_contains(g, classes[i], classes[j], h)) return false;
    return true;
}

namespace {

constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

/// Depth-first search over class assignments in a fixed vertex order.
/// A vertex joins an existing class or opens class `used` (symmetry breaking).
class Search {
public:
    Search(const Graph& g, const PatternGraph& h, int k, const std::vector<int>& order)
        : g_(g), h_(h), k_(k), order_(order), classes_(static_cast<std::size_t>(k), VertexSet(g.n())),
          colour_(g.n(), -1) {}

    /// Prefix state: colours of order_[0..depth).
    struct Prefix {
        std::vector<int> colours;
        int used = 0;
    };

    void load(const Prefix& p) {
        for (auto& c : classes_) c.clear();
        std::fill(colour_.begin(), colour_.end(), -1);
        for (std::size_t i = 0; i < p.colours.size(); ++i) assign(order_[i], p.colours[i]);
    }

    /// Feasible extensions of `p` by one vertex, in search order.
    std::vector<Prefix> children(const Prefix& p) {
        load(p);
        std::vector<Prefix> out;
        const std::size_t depth = p.colours.size();
        if (depth == order_.size()) return out;
        const int v = order_[depth];
        for (int c = 0; c <= p.used && c < k_; ++c) {
            if (!try_assign(v, c, p.used)) continue;
            Prefix child = p;
            child.colours.push_back(c);
            child.used = std::max(p.used, c + 1);
            out.push_back(std::move(child));
            unassign(v, c);
        }
        return out;
    }

    /// Completes the loaded prefix of length `depth`. `abort` is polled between nodes.
    bool run(std::size_t depth, int used, const std::atomic<bool>* abort = nullptr) {
        abort_ = abort;
        return dfs(depth, used);
    }

    const std::vector<int>& colours() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void assign(int v, int c) {
        classes_[static_cast<std::size_t>(c)].insert(v);
        colour_[static_cast<std::size_t>(v)] = c;
    }
    void unassign(int v, int c) {
        classes_[static_cast<std::size_t>(c)].erase(v);
        colour_[static_cast<std::size_t>(v)] = -1;
    }

    /// Places v in class c if that keeps the partial colouring valid. Only pairs
    /// through v need checking: every other pair was valid before and is unchanged.
    bool try_assign(int v, int c, int used) {
        auto& cls = classes_[static_cast<std::size_t>(c)];
        if (g_.neighbors(v).intersects(cls)) return false;
        assign(v, c);
        const int classes_in_use = std::max(used, c + 1);
        for (int d = 0; d < classes_in_use; ++d) {
            if (d == c) continue;
            if (detail::pair_contains_through(g_, cls, classes_[static_cast<std::size_t>(d)], v, h_)) {
                unassign(v, c);
                return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t depth, int used) {
        ++nodes_;
        if (abort_ && (nodes_ & 0xFF) == 0 && abort_->load(std::memory_order_relaxed)) return false;
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        for (int c = 0; c <= used && c < k_; ++c) {
            if (!try_assign(v, c, used)) continue;
            if (dfs(depth + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }

    const Graph& g_;
    const PatternGraph& h_;
    int k_;
    const std::vector<int>& order_;
    std::vector<VertexSet> classes_;
    std::vector<int> colour_;
    std::uint64_t nodes_ = 0;
    const std::atomic<bool>* abort_ = nullptr;
};

std::vector<int> search_order(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

Coloring finish(const Graph& g, const PatternGraph& h, const std::vector<int>& colours) {
    auto c = Coloring::from_assignment(colours);
    if (!is_avoiding_coloring(g, h, c)) throw std::logic_error("solver produced an invalid colouring");
    return c;
}

std::optional<Coloring> decide_sequential(const Graph& g, const PatternGraph& h, int k, const std::vector<int>& order,
                                          std::uint64_t& nodes) {
    Search s(g, h, k, order);
    const bool ok = s.run(0, 0);
    nodes += s.nodes();
    if (!ok) return std::nullopt;
    return finish(g, h, s.colours());
}

/// Splits the search tree into prefixes (in sequential visiting order) and
/// completes them on worker threads. The lowest-index successful prefix wins,
/// which is exactly the witness the sequential search returns.
std::optional<Coloring> decide_parallel(const Graph& g, const PatternGraph& h, int k, const std::vector<int>& order,
                                        unsigned threads, std::uint64_t& nodes) {
    Search splitter(g, h, k, order);
    std::vector<Search::Prefix> frontier{Search::Prefix{}};
    const std::size_t target = static_cast<std::size_t>(threads) * 8;
    std::size_t depth = 0;
    while (depth < order.size() && frontier.size() < target) {
        std::vector<Search::Prefix> next;
        for (const auto& p : frontier) {
            auto kids = splitter.children(p);
            nodes += 1;
            for (auto& kid : kids) next.push_back(std::move(kid));
        }
        frontier = std::move(next);
        ++depth;
        if (frontier.empty()) return std::nullopt;
    }
    if (depth == order.size()) {
        splitter.load(frontier.front());
        return finish(g, h, splitter.colours());
    }

    std::atomic<std::size_t> next_branch{0};
    std::atomic<std::size_t> best{kNoBranch};
    std::atomic<std::uint64_t> total_nodes{0};
    std::vector<std::vector<int>> solutions(frontier.size());
    std::vector<std::unique_ptr<std::atomic<bool>>> aborts;
    aborts.reserve(frontier.size());
    for (std::size_t i = 0; i < frontier.size(); ++i) aborts.push_back(std::make_unique<std::atomic<bool>>(false));
    std::mutex abort_mutex;

    auto worker = [&] {
        Search s(g, h, k, order);
        std::uint64_t mine = 0;
        while (true) {
            const std::size_t idx = next_branch.fetch_add(1);
            if (idx >= frontier.size()) break;
            if (idx > best.load()) continue;
            s.load(frontier[idx]);
            const std::uint64_t before = s.nodes();
            const bool ok = s.run(depth, frontier[idx].used, aborts[idx].get());
            mine += s.nodes() - before;
            if (!ok) continue;
            solutions[idx] = s.colours();
            std::size_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            std::lock_guard lock(abort_mutex);
            for (std::size_t j = idx + 1; j < frontier.size(); ++j) aborts[j]->store(true);
        }
        total_nodes += mine;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    nodes += total_nodes.load();
    const std::size_t won = best.load();
    if (won == kNoBranch) return std::nullopt;
    return finish(g, h, solutions[won]);
}

}  // namespace

std::optional<Coloring> decide_chi_H(const Graph& g, const PatternGraph& h, int k, const SolverOptions& options,
                                     std::uint64_t* nodes) {
    if (k < 1) throw std::invalid_argument("decide_chi_H: k must be >= 1");
    std::uint64_t local = 0;
    std::uint64_t& counter = nodes ? *nodes : local;
    if (nodes) *nodes = 0;
    if (g.n() == 0) return Coloring{};
    if (greedy_clique_size(g) > k) return std::nullopt;
    const auto order = search_order(g);
    if (options.threads <= 1) return decide_sequential(g, h, k, order, counter);
    return decide_parallel(g, h, k, order, options.threads, counter);
}

SolveResult chi_H(const Graph& g, const PatternGraph& h, const SolverOptions& options) {
    SolveResult result;
    if (g.n() == 0) return result;
    for (int k = std::max(1, greedy_clique_size(g)); k <= static_cast<int>(g.n()); ++k) {
        std::uint64_t nodes = 0;
        auto c = decide_chi_H(g, h, k, options, &nodes);
        result.nodes_explored += nodes;
        if (c) {
            result.value = c->class_count();
            result.witness = std::move(*c);
            return result;
        }
    }
    throw NoAvoidingColoring("no " + h.name() + "-avoiding colouring exists");
}

int brute_force_chi_H(const Graph& g, const PatternGraph& h) {
    const std::size_t n = g.n();
    if (n > kBruteForceMaxVertices)
        throw std::invalid_argument("brute_force_chi_H refuses graphs with more than " +
                                    std::to_string(kBruteForceMaxVertices) + " vertices");
    if (n == 0) return 0;
    const PatternGraph generic = h.as_custom();
    std::vector<VertexSet> cls(n, VertexSet(n));
    std::vector<int> rgs(n, -1);
    int best = std::numeric_limits<int>::max();

    // Partial partitions that already fail stay failed (induced copies persist),
    // so rejecting them early skips only invalid partitions.
    auto rec = [&](auto&& self, std::size_t v, int used) -> void {
        if (v == n) {
            if (used < best && is_avoiding_coloring(g, generic, Coloring::from_assignment(rgs))) best = used;
            return;
        }
        const int vi = static_cast<int>(v);
        for (int c = 0; c <= used && c < best; ++c) {
            auto& target = cls[static_cast<std::size_t>(c)];
            if (g.neighbors(vi).intersects(target)) continue;
            target.insert(vi);
            bool ok = true;
            for (int d = 0; d < std::max(used, c + 1) && ok; ++d)
                if (d != c) ok = !detail::pair_contains(g, target, cls[static_cast<std::size_t>(d)], generic);
            if (ok) {
                rgs[v] = c;
                self(self, v + 1, std::max(used, c + 1));
            }
            target.erase(vi);
        }
        rgs[v] = -1;
    };
    rec(rec, 0, 0);
    if (best == std::numeric_limits<int>::max())
        throw NoAvoidingColoring("no " + h.name() + "-avoiding colouring exists");
    return best;
}

}  // namespace hcolor
