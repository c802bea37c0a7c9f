#include <doctest.h>

#include <random>

#include "hcolor/generators.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/graph_io.hpp"
#include "oracles.hpp"

using namespace hcolor;

namespace {

Graph twok2() { return gen::matching(2); }

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(130, {0, 64, 129});
    CHECK(s.count() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.members() == std::vector<int>{0, 64, 129});
    CHECK(s.complement().count() == 127);
    CHECK_THROWS_AS(s.insert(130), std::out_of_range);
    CHECK_THROWS_AS(s |= VertexSet(10), std::invalid_argument);
    VertexSet t(130, {64});
    CHECK(t.is_subset_of(s));
    CHECK_FALSE(s.is_subset_of(t));
    CHECK((s - t).members() == std::vector<int>{0, 129});
}

TEST_CASE("graph construction") {
    Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), std::invalid_argument);
    CHECK(gen::complete(4).complement().edge_count() == 0);
}

TEST_CASE("parse_graph formats") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(parse_graph("3\n0 1\n1 2", GraphFormat::edgelist) == p3);
    CHECK(parse_graph("c path\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs) == p3);
    CHECK(parse_graph("011\n101\n110", GraphFormat::matrix) == gen::complete(3));
    CHECK(parse_graph("# comment\n3\n\n0 1\n0 1\n1 2\n", GraphFormat::edgelist) == p3);
    CHECK(parse_graph("0 1 0\n1 0 1\n0 1 0\n", GraphFormat::matrix) == p3);
}

TEST_CASE("parse_graph errors carry line numbers") {
    try {
        parse_graph("3\n0 1\n1 x\n", GraphFormat::edgelist);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_graph("3\n0 1\n2 2\n", GraphFormat::edgelist);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("3\n0 5\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("01\n00\n", GraphFormat::matrix), ParseError);
    CHECK_THROWS_AS(parse_graph("11\n10\n", GraphFormat::matrix), ParseError);
    CHECK_THROWS_AS(parse_graph("010\n10\n", GraphFormat::matrix), ParseError);
    CHECK_THROWS_AS(parse_format("gml"), std::invalid_argument);
}

TEST_CASE("edgelist round trip") {
    const Graph g = gen::petersen();
    CHECK(parse_graph(write_edgelist(g), GraphFormat::edgelist) == g);
}

TEST_CASE("format from path") {
    CHECK(format_from_path("a.col") == GraphFormat::dimacs);
    CHECK(format_from_path("a.mat") == GraphFormat::matrix);
    CHECK(format_from_path("a.edges") == GraphFormat::edgelist);
}

TEST_CASE("induced_subgraph examples") {
    const Graph c5 = gen::cycle(5);
    CHECK(induced_subgraph(c5, c5.all_vertices()).graph == c5);
    const auto sub = induced_subgraph(c5, VertexSet(5, {0, 1, 2, 3}));
    CHECK(sub.graph == gen::path(4));
    CHECK(sub.original_ids == std::vector<int>{0, 1, 2, 3});
    CHECK(induced_subgraph(gen::complete(4), VertexSet(4, {0, 2, 3})).graph == gen::complete(3));
    CHECK_THROWS(induced_subgraph(c5, VertexSet(7, {6})));
}

TEST_CASE("contains_induced examples") {
    CHECK_FALSE(contains_induced(gen::path(4), twok2()).has_value());
    CHECK(contains_induced(gen::cycle(5), gen::path(3)).has_value());
    auto phi = contains_induced(gen::path(8), twok2());
    REQUIRE(phi.has_value());
    const Graph g = gen::path(8), h = twok2();
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            CHECK(h.adjacent(a, b) == g.adjacent((*phi)[static_cast<std::size_t>(a)], (*phi)[static_cast<std::size_t>(b)]));
    CHECK_FALSE(contains_induced(gen::path(3), gen::path(4)).has_value());
}

TEST_CASE("contains_induced agrees with the subset scan") {
    std::mt19937_64 rng(11);
    std::vector<Graph> patterns;
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : oracle::catalog(n)) patterns.push_back(h);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + trial % 6;
        const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
        for (const auto& h : patterns) {
            const auto found = contains_induced(g, h);
            CHECK(found.has_value() == oracle::has_induced_copy(g, h));
        }
    }
}

TEST_CASE("chromatic_number examples") {
    CHECK(chromatic_number(gen::complete(5), 10) == 5);
    CHECK(chromatic_number(gen::cycle(5), 10) == 3);
    CHECK(chromatic_number(gen::petersen(), 10) == 3);
    CHECK_FALSE(chromatic_number(gen::complete(5), 4).has_value());
    CHECK(chromatic_number(Graph(), 1) == 0);
    CHECK_THROWS_AS(chromatic_number(gen::path(3), 0), std::invalid_argument);
}

TEST_CASE("chromatic_number agrees with the partition oracle on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::catalog(n)) {
            CHECK(chromatic_number(g, n) == oracle::chromatic_number(g));
            const auto col = optimal_proper_coloring(g);
            int used = 0;
            for (int c : col) used = std::max(used, c + 1);
            CHECK(used == oracle::chromatic_number(g));
            for (auto [u, v] : g.edges()) CHECK(col[static_cast<std::size_t>(u)] != col[static_cast<std::size_t>(v)]);
        }
}

TEST_CASE("catalog sizes match the known counts") {
    CHECK(oracle::catalog(4).size() == 11);
    CHECK(oracle::catalog(5).size() == 34);
    CHECK(oracle::catalog(6).size() == 156);
    CHECK(oracle::catalog(7).size() == 1044);
}

TEST_CASE("independence_number examples") {
    CHECK(independence_number(gen::empty(6)) == 6);
    CHECK(independence_number(gen::cycle(5)) == 2);
    CHECK(independence_number(gen::path(7)) == 4);
    CHECK(independence_number(gen::petersen()) == 4);
}

TEST_CASE("maximal_independent_sets examples") {
    auto k3 = maximal_independent_sets(gen::complete(3), 100);
    REQUIRE(k3);
    CHECK(*k3 == std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})});
    auto p3 = maximal_independent_sets(gen::path(3), 100);
    REQUIRE(p3);
    CHECK(*p3 == std::vector<VertexSet>{VertexSet(3, {0, 2}), VertexSet(3, {1})});
    auto m2 = maximal_independent_sets(twok2(), 100);
    REQUIRE(m2);
    CHECK(m2->size() == 4);
    CHECK_FALSE(maximal_independent_sets(twok2(), 3).has_value());
    CHECK_THROWS_AS(maximal_independent_sets(twok2(), 0), std::invalid_argument);
}

TEST_CASE("maximal independent sets are exactly the maximal independent subsets") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        const Graph g = oracle::random_graph(n, 0.4, rng);
        std::vector<VertexSet> expected;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            VertexSet s(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1U) s.insert(v);
            if (!is_independent(g, s)) continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!s.contains(v) && !g.neighbors(v).intersects(s)) maximal = false;
            if (maximal) expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        auto got = maximal_independent_sets(g, 100000);
        REQUIRE(got);
        CHECK(*got == expected);
    }
}

TEST_CASE("the quoted count bound for maximal independent sets fails on 3K2") {
    // 3K2 has no induced 4K2 and n = 6 is divisible by 3, yet it has 2^3 maximal
    // independent sets while C(6/3, 3) = 0. Recorded here so the cap used by the
    // three-class procedure does not lean on that bound.
    const Graph g = gen::matching(3);
    CHECK_FALSE(has_induced_matching(g, 4));
    auto mis = maximal_independent_sets(g, 1000);
    REQUIRE(mis);
    CHECK(mis->size() == 8);
}

TEST_CASE("induced matchings") {
    CHECK(has_induced_matching(gen::matching(4), 4));
    CHECK_FALSE(has_induced_matching(gen::matching(3), 4));
    CHECK(has_induced_matching(gen::path(5), 2));
    CHECK_FALSE(has_induced_matching(gen::path(4), 2));
    CHECK_FALSE(has_induced_matching(gen::complete(8), 2));
}

TEST_CASE("components and bipartition") {
    const Graph g = gen::disjoint_union(gen::path(3), gen::cycle(3));
    CHECK(connected_components(g) == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(bipartition(g).has_value());
    auto sides = bipartition(gen::cycle(6));
    REQUIRE(sides);
    for (auto [u, v] : gen::cycle(6).edges()) CHECK((*sides)[static_cast<std::size_t>(u)] != (*sides)[static_cast<std::size_t>(v)]);
}

TEST_CASE("generators") {
    CHECK(gen::hypercube(3).edge_count() == 12);
    CHECK(gen::hypercube(4).edge_count() == 32);
    CHECK(gen::petersen().edge_count() == 15);
    CHECK(gen::subdivided_star(3).n() == 7);
    CHECK(gen::subdivided_star(3).degree(0) == 3);
    CHECK(gen::complete_bipartite(3, 3).edge_count() == 9);
    CHECK_THROWS(gen::cycle(2));
}
