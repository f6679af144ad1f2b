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

#include "specred/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace specred::stats {

namespace {

// Σ (t^3 - t) over tie groups of the sorted values.
double tie_term(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        const double t = static_cast<double>(j - i);
        sum += t * t * t - t;
        i = j;
    }
    return sum;
}

void require_finite(std::span<const double> xs, const char* what) {
    for (double x : xs)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

}  // namespace

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty sample");
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double lower_median(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of empty sample");
    std::vector<double> v(xs.begin(), xs.end());
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

std::vector<double> midranks(std::span<const double> xs) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(xs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && xs[order[j]] == xs[order[i]]) ++j;
        // Positions i..j-1 share the average of ranks i+1..j.
        const double r = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
        i = j;
    }
    return ranks;
}

ChiSquareResult chi_square_gof(std::span<const double> observed, std::span<const double> expected_probs) {
    if (observed.size() != expected_probs.size()) throw std::invalid_argument("chi-square: bin count mismatch");
    if (observed.empty()) throw std::invalid_argument("chi-square: no bins");
    ChiSquareResult out;
    out.dof = static_cast<int>(observed.size()) - 1;
    if (observed.size() == 1) return out;

    const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
    const double mass = std::accumulate(expected_probs.begin(), expected_probs.end(), 0.0);
    if (!(mass > 0.0)) throw std::invalid_argument("chi-square: expected probabilities sum to zero");
    if (total <= 0.0) return out;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = total * expected_probs[i] / mass;
        if (!(e > 0.0)) throw std::invalid_argument("chi-square: zero expected count in a bin");
        out.statistic += (observed[i] - e) * (observed[i] - e) / e;
    }
    out.p_value = chi_square_sf(out.statistic, out.dof);
    return out;
}

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney_u needs nonempty samples");
    require_finite(a, "mann_whitney_u");
    require_finite(b, "mann_whitney_u");
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = midranks(pooled);

    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;
    const double r1 = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);

    MannWhitneyResult out;
    out.u = r1 - n1 * (n1 + 1.0) / 2.0;
    const double mu = n1 * n2 / 2.0;
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term(pooled) / (n * (n - 1.0)));
    if (!(var > 0.0)) return out;
    // Continuity correction toward the mean.
    const double dev = std::max(0.0, std::abs(out.u - mu) - 0.5);
    out.z = std::copysign(dev / std::sqrt(var), out.u - mu);
    out.p_value = std::min(1.0, 2.0 * normal_sf(std::abs(out.z)));
    return out;
}

std::string to_string(Magnitude m) {
    switch (m) {
        case Magnitude::Negligible: return "negligible";
        case Magnitude::Small: return "small";
        case Magnitude::Medium: return "medium";
        case Magnitude::Large: return "large";
    }
    return "negligible";
}

char magnitude_letter(Magnitude m) {
    switch (m) {
        case Magnitude::Negligible: return 'N';
        case Magnitude::Small: return 'S';
        case Magnitude::Medium: return 'M';
        case Magnitude::Large: return 'L';
    }
    return 'N';
}

Magnitude effect_magnitude(double scaled) {
    const double s = std::abs(scaled);
    if (s < 0.147) return Magnitude::Negligible;
    if (s <= 0.33) return Magnitude::Small;
    if (s < 0.474) return Magnitude::Medium;
    return Magnitude::Large;
}

EffectSize vargha_delaney(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("vargha_delaney needs nonempty samples");
    require_finite(a, "vargha_delaney");
    require_finite(b, "vargha_delaney");
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = midranks(pooled);
    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double r1 = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);

    EffectSize out;
    out.a12 = (r1 / n1 - (n1 + 1.0) / 2.0) / n2;
    out.scaled = 2.0 * (out.a12 - 0.5);
    out.magnitude = effect_magnitude(out.scaled);
    return out;
}

KruskalWallisResult kruskal_wallis_statistic(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) throw std::invalid_argument("kruskal_wallis needs at least 2 groups");
    std::vector<double> pooled;
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("kruskal_wallis: empty group");
        require_finite(g, "kruskal_wallis");
        pooled.insert(pooled.end(), g.begin(), g.end());
    }
    const auto ranks = midranks(pooled);
    const double n = static_cast<double>(pooled.size());

    KruskalWallisResult out;
    out.dof = static_cast<int>(groups.size()) - 1;
    const double correction = 1.0 - tie_term(pooled) / (n * n * n - n);
    if (!(correction > 0.0)) return out;

    double sum = 0.0;
    std::size_t offset = 0;
    for (const auto& g : groups) {
        double r = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) r += ranks[offset + i];
        sum += r * r / static_cast<double>(g.size());
        offset += g.size();
    }
    out.h = std::max(0.0, (12.0 / (n * (n + 1.0)) * sum - 3.0 * (n + 1.0)) / correction);
    out.p_value = chi_square_sf(out.h, out.dof);
    return out;
}

KruskalWallisResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 3) throw std::invalid_argument("kruskal_wallis needs at least 3 groups; use mann_whitney_u");
    return kruskal_wallis_statistic(groups);
}

std::string to_string(CorrelationStrength s) {
    switch (s) {
        case CorrelationStrength::Negligible: return "Negligible";
        case CorrelationStrength::Weak: return "Weak";
        case CorrelationStrength::Moderate: return "Moderate";
        case CorrelationStrength::Strong: return "Strong";
        case CorrelationStrength::VeryStrong: return "VeryStrong";
    }
    return "Negligible";
}

CorrelationStrength correlation_strength(double r) {
    const double a = std::abs(r);
    if (a < 0.10) return CorrelationStrength::Negligible;
    if (a < 0.40) return CorrelationStrength::Weak;
    if (a < 0.70) return CorrelationStrength::Moderate;
    if (a < 0.90) return CorrelationStrength::Strong;
    return CorrelationStrength::VeryStrong;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman: samples differ in length");
    if (x.size() < 3) throw std::invalid_argument("spearman needs at least 3 pairs");
    require_finite(x, "spearman");
    require_finite(y, "spearman");
    const auto rx = midranks(x);
    const auto ry = midranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }

    CorrelationResult out;
    if (!(sxx > 0.0) || !(syy > 0.0)) return out;
    out.r_s = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    out.magnitude = correlation_strength(out.r_s);
    out.sign = out.r_s > 0.0 ? 1 : (out.r_s < 0.0 ? -1 : 0);
    const double dof = n - 2.0;
    const double denom = 1.0 - out.r_s * out.r_s;
    if (denom <= 0.0) {
        out.p_value = 0.0;
    } else {
        out.p_value = student_t_two_sided(out.r_s * std::sqrt(dof / denom), dof);
    }
    return out;
}

double speedup_slowdown(double t_default, double t_reduced) {
    if (!(t_default > 0.0) || !(t_reduced > 0.0)) throw std::invalid_argument("speedup needs positive runtimes");
    if (t_default > t_reduced) return t_default / t_reduced;
    return -t_reduced / t_default;
}

bool significant(double p_value, const EffectSize& effect, double alpha) {
    return p_value <= alpha && effect.magnitude != Magnitude::Negligible;
}

}  // namespace specred::stats
