#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcolor/graph.hpp"

namespace hcolor {

/// G(n,p) with std::mt19937_64 seeded by `seed`. Pairs (i,j), i < j, are visited
/// in lexicographic order with one 64-bit draw each; the pair is an edge when
/// (draw >> 11) * 2^-53 < p. Throws std::invalid_argument unless 0 <= p <= 1.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// (n)_{k1 ell} / (ell! (k1!)^ell) * Q^C(ell,2) * (1-p)^(ell C(k1,2)), evaluated
/// in log space. 0 when k1 * ell > n. Throws unless 0 < Q <= 1, 0 <= p <= 1,
/// k1 >= 1 and ell >= 0.
double complex_probability_bound(int n, int ell, int k1, double p, double q);

/// Q = 1 - 2p^2(1-p)^2 for H = 2K2.
double q_2k2(double p);

/// ceil(n/(k-1) - k/(k-1) * ell), the class count forced when classes of the
/// given sizes hold fewer than ell disjoint k-sets. Throws when k < 2 or the
/// sizes sum past n.
int complex_count_lower_bound_check(int k, int ell, int n, const std::vector<int>& class_sizes);

struct ExperimentRow {
    std::size_t n = 0;
    double p = 0;
    std::uint64_t seed = 0;
    int trial = 0;
    int chi = 0;
    int alpha = 0;
    std::optional<int> chi_2k2;
    /// n - 8 log_{1/Q} n; absent when Q = 1.
    std::optional<double> lower_formula;
    /// n - 2 log_d n with d = 1/(1-p); absent when p is 0 or 1.
    std::optional<double> upper_formula;
    double q = 0;
    /// chi <= chi_2k2 <= n - alpha + 1 (true when chi_2k2 was not computed).
    bool sandwich = true;
};

inline constexpr std::size_t kRandomExactMaxVertices = 14;

/// Trial t samples G(n, p) with seed + t; chi_2k2 is solved exactly when n <= 14.
std::vector<ExperimentRow> random_report(std::size_t n, double p, int trials, std::uint64_t seed);

/// CSV with header n,p,seed,trial,chi,alpha,chi_2k2,lower_formula,upper_formula,q.
/// Reals use six decimals; missing values are "undefined".
std::string report_csv(const std::vector<ExperimentRow>& rows);

}  // namespace hcolor
