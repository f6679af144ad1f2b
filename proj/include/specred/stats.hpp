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

// Nonparametric tests and effect sizes for comparing experiment outcomes.
// Ties are resolved with midranks everywhere; p-values use the normal or
// chi-square approximation.

#ifndef SPECRED_STATS_HPP
#define SPECRED_STATS_HPP

#include <span>
#include <string>
#include <vector>

namespace specred::stats {

// --- special functions ----------------------------------------------------

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);
/// Regularized incomplete beta I_x(a, b).
double regularized_beta(double x, double a, double b);

/// Upper tail of the standard normal.
double normal_sf(double z);
/// Upper tail of chi-square with `dof` degrees of freedom.
double chi_square_sf(double x, double dof);
/// Two-sided tail Pr[|T| >= |t|] of Student's t.
double student_t_two_sided(double t, double dof);

// --- descriptive ----------------------------------------------------------

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double stddev(std::span<const double> xs);
/// Lower median.
double lower_median(std::span<const double> xs);

/// 1-based midranks of `xs` in their original order.
std::vector<double> midranks(std::span<const double> xs);

// --- tests ----------------------------------------------------------------

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Pearson goodness of fit of `observed` counts against `expected_probs`
/// (rescaled to sum to one). One bin gives statistic 0 and p = 1.
ChiSquareResult chi_square_gof(std::span<const double> observed, std::span<const double> expected_probs);

struct MannWhitneyResult {
    double u = 0.0;  ///< U statistic of the first sample.
    double z = 0.0;
    double p_value = 1.0;
};

/// Two-sided Mann-Whitney U with tie-corrected normal approximation.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

enum class Magnitude { Negligible, Small, Medium, Large };
std::string to_string(Magnitude m);
/// Single-letter form used in reports: N, S, M, L.
char magnitude_letter(Magnitude m);

struct EffectSize {
    double a12 = 0.5;
    double scaled = 0.0;
    Magnitude magnitude = Magnitude::Negligible;
};

/// Bin for |2(A - 1/2)|: N < 0.147 <= S <= 0.33 < M < 0.474 <= L.
Magnitude effect_magnitude(double scaled);

/// Vargha-Delaney A12: probability that a draw from `a` beats one from `b`,
/// ties counting one half.
EffectSize vargha_delaney(std::span<const double> a, std::span<const double> b);

struct KruskalWallisResult {
    double h = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// H statistic with tie correction for two or more groups.
KruskalWallisResult kruskal_wallis_statistic(const std::vector<std::vector<double>>& groups);
/// Kruskal-Wallis for three or more groups (two groups: use mann_whitney_u).
KruskalWallisResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

enum class CorrelationStrength { Negligible, Weak, Moderate, Strong, VeryStrong };
std::string to_string(CorrelationStrength s);

struct CorrelationResult {
    double r_s = 0.0;
    double p_value = 1.0;
    CorrelationStrength magnitude = CorrelationStrength::Negligible;
    int sign = 0;
};

CorrelationStrength correlation_strength(double r);

/// Spearman rank correlation. Zero rank variance in either input gives r = 0, p = 1.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

/// Speedup t_def / t_red when t_def > t_red, otherwise slowdown -t_red / t_def.
double speedup_slowdown(double t_default, double t_reduced);

/// Reported significance: p <= 0.05 and a non-negligible effect.
bool significant(double p_value, const EffectSize& effect, double alpha = 0.05);

}  // namespace specred::stats

#endif  // SPECRED_STATS_HPP
