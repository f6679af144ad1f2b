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

// Mixed Hadamard bases and the searches that pick one.
//
// A basis is a per-qubit choice between the identity and a Hadamard,
// written in shorthand with '1' and 'h' (qubit 0 leftmost). The searches
// minimize the rank of the transformed state: Greedy fixes one Hadamard per
// round, Random samples masks without replacement under a call budget, and
// Exhaustive enumerates all 2^n masks.

#ifndef SPECRED_BASIS_HPP
#define SPECRED_BASIS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "specred/statevector.hpp"

namespace specred {

/// Upper bound on n for exhaustive_reduce.
inline constexpr int kMaxExhaustiveQubits = 20;

/// Which qubits receive a Hadamard before measurement.
///
/// Bits are stored with qubit 0 in the most significant position, the same
/// convention as basis indices, so numeric order of `ordinal()` equals the
/// lexicographic order of the shorthand strings ('1' < 'h').
class BasisMask {
public:
    BasisMask() = default;

    static BasisMask identity(int num_qubits) { return BasisMask(num_qubits, 0); }
    static BasisMask from_ordinal(int num_qubits, std::uint64_t ordinal);
    static BasisMask from_qubits(int num_qubits, const std::vector<int>& qubits);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t ordinal() const { return ordinal_; }
    bool test(int q) const { return (ordinal_ >> bit_of_qubit(q, num_qubits_)) & 1U; }
    bool is_identity() const { return ordinal_ == 0; }
    int count() const;
    std::vector<int> qubits() const;

    BasisMask with(int q) const;
    BasisMask without(int q) const;

    bool operator==(const BasisMask&) const = default;
    auto operator<=>(const BasisMask&) const = default;

private:
    BasisMask(int n, std::uint64_t ordinal) : num_qubits_(n), ordinal_(ordinal) {}

    int num_qubits_ = 0;
    std::uint64_t ordinal_ = 0;
};

/// Parses "1h1h" style shorthand. Throws std::invalid_argument.
BasisMask parse_mask(std::string_view text);
std::string format_mask(const BasisMask& mask);

template <typename Scalar>
BasicStatevector<Scalar> apply_basis_transform(const BasicStatevector<Scalar>& state, const BasisMask& mask) {
    if (mask.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("mask has " + std::to_string(mask.num_qubits()) + " qubits, state has " +
                                    std::to_string(state.num_qubits()));
    }
    auto amps = state.amplitudes();
    for (int q : mask.qubits()) detail::apply_hadamard_inplace<Scalar>(amps, state.num_qubits(), q);
    return BasicStatevector<Scalar>::from_amplitudes(std::move(amps));
}

/// One Greedy round: the ranks tried and the qubit fixed (-1 when the round
/// found no strict improvement and the search stopped).
struct GreedyRound {
    std::vector<int> candidates;
    std::vector<std::uint64_t> ranks;
    int fixed = -1;
};

struct ReductionResult {
    BasisMask mask;
    std::uint64_t reduced_rank = 0;
    std::uint64_t default_rank = 0;
    /// Basis-change evaluations made by the search.
    std::uint64_t objective_calls = 0;
    /// objective_calls plus the separate evaluation of the untransformed state,
    /// when the search made one.
    std::uint64_t calls_with_identity = 0;
    double wall_time_s = 0.0;
    /// Greedy only.
    std::vector<GreedyRound> rounds;

    /// Qubits in the order Greedy fixed them.
    std::vector<int> fixed_order() const {
        std::vector<int> out;
        for (const auto& r : rounds)
            if (r.fixed >= 0) out.push_back(r.fixed);
        return out;
    }
};

/// n(n+1)/2: the most basis changes Greedy can evaluate on n qubits.
std::uint64_t theoretical_max_calls(int num_qubits);

/// 100 (1 - reduced / default). Throws on non-positive ranks.
double reduction_rate(std::uint64_t default_rank, std::uint64_t reduced_rank);

namespace detail {
inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}
}  // namespace detail

/// Greedy rank reduction.
///
/// Each round tries one additional Hadamard at every qubit still in the
/// search space and records the ranks. If the smallest rank is not strictly
/// below the previous minimum the search stops and keeps the current mask;
/// otherwise one of the minimizing qubits is chosen uniformly at random from
/// `rng`, fixed, and removed from the search space.
template <typename Scalar, typename Rng>
ReductionResult greedy_reduce(const BasicStatevector<Scalar>& default_ps, Rng& rng,
                              double eps = kDefaultRankCutoff) {
    const auto start = std::chrono::steady_clock::now();
    const int n = default_ps.num_qubits();

    ReductionResult result;
    result.mask = BasisMask::identity(n);
    result.default_rank = rank(default_ps, eps);

    std::vector<int> search_space(static_cast<std::size_t>(n));
    std::iota(search_space.begin(), search_space.end(), 0);

    auto current = default_ps.amplitudes();
    std::uint64_t previous_min = result.default_rank;
    detail::AmplitudeVector<Scalar> trial;

    while (!search_space.empty()) {
        GreedyRound round;
        round.candidates = search_space;
        for (int q : search_space) {
            trial = current;
            detail::apply_hadamard_inplace<Scalar>(trial, n, q);
            round.ranks.push_back(detail::count_above<Scalar>(trial, eps));
            ++result.objective_calls;
        }
        const std::uint64_t current_min = *std::min_element(round.ranks.begin(), round.ranks.end());
        if (current_min >= previous_min) {
            result.rounds.push_back(std::move(round));
            break;
        }
        std::vector<std::size_t> minima;
        for (std::size_t i = 0; i < round.ranks.size(); ++i)
            if (round.ranks[i] == current_min) minima.push_back(i);
        std::uniform_int_distribution<std::size_t> pick(0, minima.size() - 1);
        const std::size_t chosen = minima[pick(rng)];
        const int k = search_space[chosen];

        round.fixed = k;
        result.rounds.push_back(std::move(round));
        result.mask = result.mask.with(k);
        detail::apply_hadamard_inplace<Scalar>(current, n, k);
        search_space.erase(search_space.begin() + static_cast<std::ptrdiff_t>(chosen));
        previous_min = current_min;
    }

    result.reduced_rank = previous_min;
    result.calls_with_identity = result.objective_calls + 1;
    result.wall_time_s = detail::seconds_since(start);
    return result;
}

/// Random baseline: evaluates min(budget, 2^n) distinct masks drawn uniformly
/// without replacement and keeps the first mask reaching the lowest rank.
template <typename Scalar, typename Rng>
ReductionResult random_reduce(const BasicStatevector<Scalar>& default_ps, std::uint64_t budget, Rng& rng,
                              double eps = kDefaultRankCutoff) {
    if (budget < 1) throw std::invalid_argument("random_reduce budget must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    const int n = default_ps.num_qubits();
    const std::uint64_t space = std::uint64_t{1} << n;
    const std::uint64_t draws = std::min(budget, space);

    std::vector<std::uint64_t> order;
    order.reserve(draws);
    if (2 * draws >= space) {
        std::vector<std::uint64_t> all(space);
        std::iota(all.begin(), all.end(), std::uint64_t{0});
        for (std::uint64_t i = 0; i < draws; ++i) {
            std::uniform_int_distribution<std::uint64_t> pick(i, space - 1);
            std::swap(all[i], all[pick(rng)]);
            order.push_back(all[i]);
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        std::uniform_int_distribution<std::uint64_t> pick(0, space - 1);
        while (order.size() < draws) {
            const std::uint64_t m = pick(rng);
            if (seen.insert(m).second) order.push_back(m);
        }
    }

    ReductionResult result;
    result.default_rank = rank(default_ps, eps);
    result.reduced_rank = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t ordinal : order) {
        const BasisMask mask = BasisMask::from_ordinal(n, ordinal);
        const std::uint64_t r = rank(apply_basis_transform(default_ps, mask), eps);
        ++result.objective_calls;
        if (r < result.reduced_rank) {
            result.reduced_rank = r;
            result.mask = mask;
        }
    }
    result.calls_with_identity = result.objective_calls + 1;
    result.wall_time_s = detail::seconds_since(start);
    return result;
}

/// Global minimum over all 2^n masks; ties go to the lexicographically
/// smallest shorthand. Masks are visited in Gray-code order so each step
/// costs one Hadamard.
template <typename Scalar>
ReductionResult exhaustive_reduce(const BasicStatevector<Scalar>& default_ps, double eps = kDefaultRankCutoff) {
    const int n = default_ps.num_qubits();
    if (n > kMaxExhaustiveQubits) {
        throw std::invalid_argument("exhaustive search limited to " + std::to_string(kMaxExhaustiveQubits) +
                                    " qubits, got " + std::to_string(n));
    }
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t space = std::uint64_t{1} << n;

    ReductionResult result;
    auto amps = default_ps.amplitudes();
    std::uint64_t best_rank = detail::count_above<Scalar>(amps, eps);
    std::uint64_t best_ordinal = 0;
    result.default_rank = best_rank;
    result.objective_calls = 1;

    for (std::uint64_t i = 1; i < space; ++i) {
        const std::uint64_t gray = i ^ (i >> 1);
        const std::uint64_t changed = gray ^ ((i - 1) ^ ((i - 1) >> 1));
        int bit = 0;
        while ((changed >> bit) != 1) ++bit;
        detail::apply_hadamard_inplace<Scalar>(amps, n, n - 1 - bit);
        const std::uint64_t r = detail::count_above<Scalar>(amps, eps);
        ++result.objective_calls;
        if (r < best_rank || (r == best_rank && gray < best_ordinal)) {
            best_rank = r;
            best_ordinal = gray;
        }
    }

    result.mask = BasisMask::from_ordinal(n, best_ordinal);
    result.reduced_rank = best_rank;
    result.calls_with_identity = result.objective_calls;
    result.wall_time_s = detail::seconds_since(start);
    return result;
}

}  // namespace specred

#endif  // SPECRED_BASIS_HPP
