#include "hcolor/random_experiments.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hcolor/exact_solver.hpp"
#include "hcolor/pattern.hpp"

namespace hcolor {

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(n, edges);
}

double complex_probability_bound(int n, int ell, int k1, double p, double q) {
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("Q must lie in (0, 1]");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    if (k1 < 1 || ell < 0 || n < 0) throw std::invalid_argument("need k1 >= 1, ell >= 0, n >= 0");
    const long long used = static_cast<long long>(k1) * ell;
    if (used > n) return 0.0;
    const double pairs_in_class = 0.5 * k1 * (k1 - 1);
    if (p == 1.0 && ell > 0 && pairs_in_class > 0) return 0.0;
    double log_value = std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(n - used) + 1.0);
    log_value -= std::lgamma(ell + 1.0) + ell * std::lgamma(k1 + 1.0);
    log_value += 0.5 * ell * (ell - 1) * std::log(q);
    if (pairs_in_class > 0 && ell > 0) log_value += ell * pairs_in_class * std::log1p(-p);
    return std::exp(log_value);
}

double q_2k2(double p) { return 1.0 - 2.0 * p * p * (1.0 - p) * (1.0 - p); }

int complex_count_lower_bound_check(int k, int ell, int n, const std::vector<int>& class_sizes) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    long long total = 0;
    for (int s : class_sizes) {
        if (s < 0) throw std::invalid_argument("class sizes must be >= 0");
        total += s;
    }
    if (total > n) throw std::invalid_argument("class sizes sum past n");
    // ceil((n - k ell) / (k - 1)) with exact integer rounding.
    const long long num = static_cast<long long>(n) - static_cast<long long>(k) * ell;
    const long long den = k - 1;
    const long long q = num / den, r = num % den;
    return static_cast<int>(r > 0 ? q + 1 : q);
}

std::vector<ExperimentRow> random_report(std::size_t n, double p, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const PatternGraph h = PatternGraph::named("2K2");
    const double q = q_2k2(p);
    const double dn = static_cast<double>(n);
    std::vector<ExperimentRow> rows;
    for (int t = 0; t < trials; ++t) {
        ExperimentRow row;
        row.n = n;
        row.p = p;
        row.seed = seed;
        row.trial = t;
        row.q = q;
        const Graph g = sample_gnp(n, p, seed + static_cast<std::uint64_t>(t));
        row.chi = n == 0 ? 0 : *chromatic_number(g, static_cast<int>(n));
        row.alpha = independence_number(g);
        if (n <= kRandomExactMaxVertices) row.chi_2k2 = chi_H(g, h).value;
        if (q < 1.0 && n > 0) row.lower_formula = dn - 8.0 * std::log(dn) / std::log(1.0 / q);
        if (p > 0.0 && p < 1.0 && n > 0) row.upper_formula = dn - 2.0 * std::log(dn) / -std::log1p(-p);
        if (row.chi_2k2)
            row.sandwich = row.chi <= *row.chi_2k2 && *row.chi_2k2 <= static_cast<int>(n) - row.alpha + 1;
        rows.push_back(row);
    }
    return rows;
}

std::string report_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << "n,p,seed,trial,chi,alpha,chi_2k2,lower_formula,upper_formula,q\n";
    auto opt = [&](const auto& v) {
        if (v)
            out << *v;
        else
            out << "undefined";
    };
    for (const auto& r : rows) {
        out << r.n << ',' << r.p << ',' << r.seed << ',' << r.trial << ',' << r.chi << ',' << r.alpha << ',';
        opt(r.chi_2k2);
        out << ',';
        opt(r.lower_formula);
        out << ',';
        opt(r.upper_formula);
        out << ',' << r.q << '\n';
    }
    return out.str();
}

}  // namespace hcolor
