#pragma once

#include "cas/chart.hpp"
#include "cas/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace test {

inline constexpr double pi = std::numbers::pi;

inline double max_abs(cas::Vec4 a)
{
    return std::max({std::abs(a.x1), std::abs(a.x2), std::abs(a.x3), std::abs(a.t)});
}

inline double dist(cas::Vec4 a, cas::Vec4 b) { return max_abs(a - b); }

/// Two-pass population standard deviation.
inline double stdev(const std::vector<double>& xs)
{
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size()));
}

/// Uniform random admissible (u, v) pairs over [u0, u1] x chart v-domain.
inline std::vector<std::pair<double, double>> random_points(const cas::Chart& chart, int n, unsigned seed,
                                                            double u0 = 0.0, double u1 = 2.0)
{
    std::mt19937_64 rng(seed);
    const auto [v0, v1] = chart.v_domain();
    std::uniform_real_distribution<double> U(u0, u1), V(v0, v1);
    std::vector<std::pair<double, double>> out;
    while (static_cast<int>(out.size()) < n) {
        const double u = U(rng), v = V(rng);
        if (chart.admissible(u, v)) out.emplace_back(u, v);
    }
    return out;
}

} // namespace test
