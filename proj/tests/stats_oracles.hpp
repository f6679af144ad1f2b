// Copyright 2026 The specred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference statistics: pairwise counts, exhaustive or sampled
// permutation distributions, and the classic rank-difference formula. They
// use O(n^2) pairwise ranks and share no code with the library.

#ifndef SPECRED_TESTS_STATS_ORACLES_HPP
#define SPECRED_TESTS_STATS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace specred::testing {

/// 1 + #{smaller} + (#{equal} - 1) / 2, computed pairwise.
inline std::vector<double> pairwise_ranks(const std::vector<double>& xs) {
    std::vector<double> r(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double less = 0, equal = 0;
        for (double y : xs) {
            less += y < xs[i];
            equal += y == xs[i];
        }
        r[i] = 1.0 + less + (equal - 1.0) / 2.0;
    }
    return r;
}

/// Wins of a over b with ties counted as half.
inline double pairwise_wins(const std::vector<double>& a, const std::vector<double>& b) {
    double w = 0.0;
    for (double x : a)
        for (double y : b) w += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    return w;
}

inline double oracle_a12(const std::vector<double>& a, const std::vector<double>& b) {
    return pairwise_wins(a, b) / static_cast<double>(a.size() * b.size());
}

/// Visits every way to choose k of n positions.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<bool>&)>& f) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::sort(pick.begin(), pick.end());
    do {
        f(pick);
    } while (std::next_permutation(pick.begin(), pick.end()));
}

/// Exact two-sided permutation p-value of U over all relabelings of the pooled sample.
inline double oracle_mwu_exact_p(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const double mu = static_cast<double>(a.size() * b.size()) / 2.0;
    const double observed = std::abs(pairwise_wins(a, b) - mu);
    double extreme = 0, total = 0;
    for_each_subset(pooled.size(), a.size(), [&](const std::vector<bool>& pick) {
        std::vector<double> x, y;
        for (std::size_t i = 0; i < pooled.size(); ++i) (pick[i] ? x : y).push_back(pooled[i]);
        total += 1;
        if (std::abs(pairwise_wins(x, y) - mu) >= observed - 1e-9) extreme += 1;
    });
    return extreme / total;
}

/// H from the textbook formula over pairwise ranks, divided by the tie correction.
inline double oracle_kw_h(const std::vector<std::vector<double>>& groups) {
    std::vector<double> pooled;
    for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
    const auto r = pairwise_ranks(pooled);
    const double n = static_cast<double>(pooled.size());
    double sum = 0.0;
    std::size_t off = 0;
    for (const auto& g : groups) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) s += r[off + i];
        sum += s * s / static_cast<double>(g.size());
        off += g.size();
    }
    double ties = 0.0;
    for (double x : pooled) {
        const double t = static_cast<double>(std::count(pooled.begin(), pooled.end(), x));
        ties += t * t - 1.0;  // summed over the t members: t^3 - t per tie group
    }
    const double correction = 1.0 - ties / (n * n * n - n);
    if (correction <= 0.0) return 0.0;
    return (12.0 / (n * (n + 1.0)) * sum - 3.0 * (n + 1.0)) / correction;
}

/// Monte-Carlo permutation p-value of H.
template <typename Rng>
double oracle_kw_permutation_p(const std::vector<std::vector<double>>& groups, int permutations, Rng& rng) {
    std::vector<double> pooled;
    for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
    const double observed = oracle_kw_h(groups);
    int extreme = 0;
    for (int p = 0; p < permutations; ++p) {
        std::shuffle(pooled.begin(), pooled.end(), rng);
        std::vector<std::vector<double>> shuffled;
        std::size_t off = 0;
        for (const auto& g : groups) {
            shuffled.emplace_back(pooled.begin() + static_cast<std::ptrdiff_t>(off),
                                  pooled.begin() + static_cast<std::ptrdiff_t>(off + g.size()));
            off += g.size();
        }
        if (oracle_kw_h(shuffled) >= observed - 1e-9) ++extreme;
    }
    return (extreme + 1.0) / (permutations + 1.0);
}

/// 1 - 6 sum d^2 / (n (n^2 - 1)); valid without ties.
inline double oracle_spearman_formula(const std::vector<double>& x, const std::vector<double>& y) {
    const auto rx = pairwise_ranks(x);
    const auto ry = pairwise_ranks(y);
    const double n = static_cast<double>(x.size());
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
    return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

/// Pearson correlation of pairwise midranks; handles ties.
inline double oracle_spearman_pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const auto rx = pairwise_ranks(x);
    const auto ry = pairwise_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += rx[i] / n;
        my += ry[i] / n;
    }
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx <= 0 || syy <= 0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

/// Exact two-sided permutation p-value of r_s over all orderings of y.
/// Ranks move with their values, so permuting y's ranks is enough.
inline double oracle_spearman_exact_p(const std::vector<double>& x, const std::vector<double>& y) {
    const auto rx = pairwise_ranks(x);
    auto ry = pairwise_ranks(y);
    const double observed = std::abs(oracle_spearman_pearson(rx, ry));
    std::sort(ry.begin(), ry.end());
    double extreme = 0, total = 0;
    do {
        total += 1;
        if (std::abs(oracle_spearman_pearson(rx, ry)) >= observed - 1e-9) extreme += 1;
    } while (std::next_permutation(ry.begin(), ry.end()));
    // next_permutation skips orderings that swap equal ranks; those leave r_s unchanged
    // and occur equally often for every distinct arrangement.
    return extreme / total;
}

/// Composite Simpson rule with an even number of panels.
template <typename F>
double simpson(F f, double lo, double hi, int panels = 20000) {
    const double h = (hi - lo) / panels;
    double s = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace specred::testing

#endif  // SPECRED_TESTS_STATS_ORACLES_HPP
