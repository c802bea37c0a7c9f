#include <doctest.h>

#include "hcolor/exact_solver.hpp"
#include "hcolor/reductions.hpp"

using namespace hcolor;

namespace {

Hypergraph3 fano() {
    return Hypergraph3(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace

TEST_CASE("hypergraph parsing and validation") {
    const auto t = Hypergraph3::parse("# header\n4 2\n0 1 2\n\n1 2 3\n");
    CHECK(t.n() == 4);
    CHECK(t.m() == 2);
    CHECK(t.edges()[1] == Hypergraph3::HyperEdge{1, 2, 3});
    CHECK_THROWS(Hypergraph3::parse("4 2\n0 1 2\n"));
    CHECK_THROWS(Hypergraph3::parse("4 1\n0 1 1\n"));
    CHECK_THROWS(Hypergraph3::parse("4 1\n0 1 9\n"));
    CHECK_THROWS(Hypergraph3(3, {{0, 1, 3}}));
}

TEST_CASE("hypergraph_2colorable") {
    const auto single = hypergraph_2colorable(Hypergraph3(4, {{0, 1, 2}}));
    REQUIRE(single);
    CHECK(*single == std::vector<int>{1, 0, 0, 0});
    CHECK_FALSE(hypergraph_2colorable(fano()).has_value());
    CHECK_THROWS(hypergraph_2colorable(Hypergraph3(21, {})));
    const Hypergraph3 k4(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(hypergraph_2colorable(k4).has_value());
}

TEST_CASE("reduce_to_p3 sizes") {
    const Hypergraph3 t(4, {{0, 1, 2}, {1, 2, 3}});
    const Graph g = reduce_to_p3(t);
    CHECK(g.n() == 5 * 4 * 2 + 4 * 2);
    CHECK_THROWS(reduce_to_p3(Hypergraph3(4, {})));
}

TEST_CASE("reduce_to_p4 sizes and lifting") {
    const Hypergraph3 t(4, {{0, 1, 2}, {1, 2, 3}});
    const Graph g = reduce_to_p4(t);
    CHECK(g.n() == 2 * 4 + 1 + 11 * 2);
    CHECK_THROWS(reduce_to_p4(Hypergraph3(3, {{0, 1, 2}})));
    const auto p4 = PatternGraph::named("P4");
    // Every proper 2-colouring lifts to a valid colouring.
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> hcol(4);
        for (int i = 0; i < 4; ++i) hcol[static_cast<std::size_t>(i)] = mask >> i & 1;
        bool proper = true;
        for (const auto& e : t.edges())
            if (hcol[e[0]] == hcol[e[1]] && hcol[e[1]] == hcol[e[2]]) proper = false;
        if (!proper) {
            CHECK_THROWS_AS(lift_coloring_p4(t, hcol), std::invalid_argument);
            continue;
        }
        const auto c = lift_coloring_p4(t, hcol);
        CHECK(c.class_count() <= 3);
        CHECK(is_avoiding_coloring(g, p4, c));
    }
    CHECK_THROWS_AS(lift_coloring_p4(t, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(lift_coloring_p4(t, {0, 1}), std::invalid_argument);
}

TEST_CASE("reduce_to_p4 preserves the answer on small instances") {
    const auto p4 = PatternGraph::named("P4");
    const Hypergraph3 yes(4, {{0, 1, 2}});
    CHECK(decide_chi_H(reduce_to_p4(yes), p4, 3).has_value());
    const Hypergraph3 k4(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(decide_chi_H(reduce_to_p4(k4), p4, 3).has_value() == hypergraph_2colorable(k4).has_value());
}
