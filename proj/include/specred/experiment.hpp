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

// Experiment orchestration.
//
// Experiment 1 measures how far Greedy and Random reduce each program's
// specification. Experiment 2 tests mutant suites with the default basis and
// with the Greedy and Random masks that realize the median Experiment-1
// reduction. Every run draws from its own seed derived from the base seed
// and the run's key, so results do not depend on scheduling.

#ifndef SPECRED_EXPERIMENT_HPP
#define SPECRED_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specred/basis.hpp"
#include "specred/programs.hpp"
#include "specred/random.hpp"

namespace specred {

struct QubitRange {
    int min = 0;
    int max = 0;
};

struct ExperimentConfig {
    std::vector<Category> categories{Category::GROV, Category::GS, Category::QWALK};
    /// GROV and GS: register size. QWALK: position qubits (the coin adds one).
    std::map<Category, QubitRange> qubit_ranges{
        {Category::GROV, {3, 6}}, {Category::GS, {3, 8}}, {Category::QWALK, {2, 3}}};
    /// Program variants generated for each size in a range.
    int programs_per_size = 2;
    int r1 = 100;
    int r2 = 30;
    int gamma = 10;
    double alpha = 0.05;
    int per_op = 5;
    std::uint64_t base_seed = 2024;
    std::string output_dir = ".";
    /// Worker threads; results do not depend on this.
    int workers = 1;
    /// When false, timing columns are written as zero so reruns are byte-identical.
    bool record_timing = true;
    /// Largest Grover iteration count the program sampler draws.
    int grover_max_iterations = 7;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ExperimentConfig& config);

/// Parses a JSON object whose keys are ExperimentConfig field names. Missing
/// keys keep their defaults; unknown keys are errors.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& config);

struct ProgramInstance {
    std::string id;  ///< e.g. "GROV-n6-v0"
    Category category = Category::CUSTOM;
    int size = 0;  ///< qubits, or position qubits for QWALK
    int variant = 0;
    Circuit circuit;
};

/// Deterministic program corpus for the configured categories and ranges.
std::vector<ProgramInstance> generate_programs(const ExperimentConfig& config);

/// Marked set of a random affine subspace of codimension 2 (M = N/4).
std::vector<std::uint64_t> random_affine_marked_set(int num_qubits, Rng& rng);

struct ExperimentRecord {
    int experiment = 1;
    std::string program_id;
    std::string category;
    int n_qubits = 0;
    int depth = 0;
    std::string approach;  ///< default, greedy or random
    int repetition = 0;
    std::string mask;
    std::uint64_t default_rank = 0;
    std::uint64_t reduced_rank = 0;
    double reduction_rate = 0.0;
    std::uint64_t objective_calls = 0;
    std::uint64_t objective_calls_with_identity = 0;
    double search_time_s = 0.0;
    double test_runtime_s = 0.0;
    std::string mutant_id;  ///< experiment 2; "none" for fault-free calibration runs
    std::string verdict;    ///< experiment 2: "pass" or "fail"
    std::optional<double> p_value;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Seed of one run: hash(base_seed, program_id, approach, repetition, mutant_id).
std::uint64_t run_seed(std::uint64_t base_seed, const std::string& program_id, const std::string& approach,
                       int repetition, const std::string& mutant_id = "");

std::vector<ExperimentRecord> run_experiment1(const ExperimentConfig& config);
std::vector<ExperimentRecord> run_experiment2(const ExperimentConfig& config);

/// Index among `results` of the run at the lower-median reduction rate, ties
/// broken by the lexicographically smallest mask.
std::size_t median_run(const std::vector<ReductionResult>& results);

/// Calls task(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by a task is rethrown after all workers stop.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& task);

}  // namespace specred

#endif  // SPECRED_EXPERIMENT_HPP
