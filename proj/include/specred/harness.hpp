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

// Test cases built from a program specification in a chosen basis, shot
// sampling of a program under test, and the two oracles: WOO (every shot
// must land in the output set) and PDO (chi-square fit of the counts).

#ifndef SPECRED_HARNESS_HPP
#define SPECRED_HARNESS_HPP

#include <cstdint>
#include <vector>

#include "specred/basis.hpp"
#include "specred/programs.hpp"
#include "specred/random.hpp"

namespace specred {

struct TestCase {
    std::uint64_t input_index = 0;
    BasisMask mask;
    Distribution theoretical;
    /// Sorted indices whose transformed amplitude exceeds the rank cutoff.
    std::vector<std::uint64_t> outputs;

    bool contains(std::uint64_t index) const;
};

struct SampleDistribution {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    double frequency(std::uint64_t index) const {
        return total == 0 ? 0.0 : static_cast<double>(counts[index]) / static_cast<double>(total);
    }
};

struct GammaPolicy {
    int gamma = 10;
};

/// Outcome of one test run. The mutant (or program) is killed when either
/// oracle fails.
struct TestVerdict {
    bool woo_failed = false;
    bool pdo_failed = false;
    double p_value = 1.0;
    double runtime_s = 0.0;
    std::uint64_t shots = 0;

    bool failed() const { return woo_failed || pdo_failed; }
};

/// Timed mode re-simulates the circuit for every shot. Cached mode simulates
/// once and samples the stored distribution, for untimed bulk work.
enum class SamplingMode { Timed, Cached };

TestCase build_test_case(const Statevector& default_ps, const BasisMask& mask, std::uint64_t input_index,
                         double eps = kDefaultRankCutoff);

/// gamma * n_ps.
std::uint64_t sample_size(const GammaPolicy& policy, std::uint64_t n_ps);

struct SampledRun {
    SampleDistribution sample;
    double seconds = 0.0;
};

/// Runs `sut` followed by the mask's Hadamards `shots` times and measures
/// each execution once.
SampledRun execute_and_sample(const Circuit& sut, const BasisMask& mask, std::uint64_t shots, Rng& rng,
                              SamplingMode mode = SamplingMode::Timed);

/// 1 when the observed index is not a possible output.
int woo(std::uint64_t observed_index, const TestCase& tc);

struct PdoResult {
    bool failed = false;
    double p_value = 1.0;
};

/// Chi-square fit over the output bins only. A single output bin passes.
PdoResult pdo(const TestCase& tc, const SampleDistribution& sample, double alpha);

TestVerdict run_test(const Circuit& sut, const TestCase& tc, const GammaPolicy& policy, double alpha, Rng& rng,
                     SamplingMode mode = SamplingMode::Timed);

}  // namespace specred

#endif  // SPECRED_HARNESS_HPP
