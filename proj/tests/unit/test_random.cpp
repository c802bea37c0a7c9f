#include <doctest.h>

#include <random>

#include "hcolor/random_experiments.hpp"

using namespace hcolor;

TEST_CASE("sample_gnp is deterministic and respects the extremes") {
    CHECK(sample_gnp(20, 0.3, 5) == sample_gnp(20, 0.3, 5));
    CHECK(sample_gnp(8, 0.0, 1).edge_count() == 0);
    CHECK(sample_gnp(8, 1.0, 1).edge_count() == 28);
    CHECK_THROWS(sample_gnp(5, 1.5, 1));
    CHECK_THROWS(sample_gnp(5, -0.1, 1));
}

TEST_CASE("sample_gnp follows the documented draw rule") {
    std::mt19937_64 rng(42);
    std::vector<Edge> expected;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < 0.5) expected.emplace_back(i, j);
    CHECK(sample_gnp(10, 0.5, 42) == Graph(10, expected));
}

TEST_CASE("golden G(10, 0.5) with seed 42") {
    const std::vector<Edge> golden = {{0, 4}, {0, 6}, {0, 8}, {0, 9}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9},
                                      {3, 4}, {3, 5}, {3, 7}, {3, 9}, {4, 6}, {4, 9}, {5, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 9}, {8, 9}};
    CHECK(sample_gnp(10, 0.5, 42) == Graph(10, golden));
}

TEST_CASE("q_2k2 and the probability bound") {
    CHECK(q_2k2(0.5) == 0.875);
    CHECK(q_2k2(0.0) == 1.0);
    CHECK(complex_probability_bound(10, 0, 2, 0.5, 0.875) == doctest::Approx(1.0));
    CHECK(complex_probability_bound(10, 6, 2, 0.5, 0.875) == 0.0);
    CHECK(complex_probability_bound(12, 1, 2, 0.5, 0.875) == doctest::Approx(33.0));
    // n = 4, ell = 2, k1 = 2: 4!/(2! 2^2) * Q * (1-p)^2 = 3 * Q * (1-p)^2.
    CHECK(complex_probability_bound(4, 2, 2, 0.5, 0.875) == doctest::Approx(3 * 0.875 * 0.25));
    CHECK_THROWS(complex_probability_bound(10, 1, 2, 0.5, 0.0));
    CHECK_THROWS(complex_probability_bound(10, -1, 2, 0.5, 0.5));
}

TEST_CASE("complex_count_lower_bound_check") {
    CHECK(complex_count_lower_bound_check(2, 0, 10, {}) == 10);
    CHECK(complex_count_lower_bound_check(3, 2, 12, {}) == 3);
    CHECK_THROWS(complex_count_lower_bound_check(1, 0, 5, {}));
    CHECK_THROWS(complex_count_lower_bound_check(2, 0, 5, {3, 3}));
}

TEST_CASE("random_report rows and CSV") {
    const auto rows = random_report(9, 0.5, 4, 11);
    REQUIRE(rows.size() == 4);
    // Each row records the base seed; trial t sampled with seed + t.
    CHECK(rows[2].alpha == independence_number(sample_gnp(9, 0.5, 13)));
    CHECK(rows[2].chi == *chromatic_number(sample_gnp(9, 0.5, 13), 9));
    for (std::size_t t = 0; t < rows.size(); ++t) {
        CHECK(rows[t].seed == 11);
        CHECK(rows[t].trial == static_cast<int>(t));
        REQUIRE(rows[t].chi_2k2);
        CHECK(rows[t].sandwich);
        CHECK(rows[t].q == 0.875);
    }
    const auto csv = report_csv(rows);
    CHECK(csv.rfind("n,p,seed,trial,chi,alpha,chi_2k2,lower_formula,upper_formula,q\n", 0) == 0);
    CHECK(csv == report_csv(random_report(9, 0.5, 4, 11)));
    const auto big = random_report(20, 0.0, 1, 1);
    CHECK_FALSE(big[0].chi_2k2.has_value());
    CHECK(report_csv(big).find("undefined") != std::string::npos);
}
