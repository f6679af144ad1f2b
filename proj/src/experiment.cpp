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

#include "specred/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "specred/harness.hpp"
#include "specred/mutation.hpp"

namespace specred {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& task) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                stop.store(true);
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::uint64_t run_seed(std::uint64_t base_seed, const std::string& program_id, const std::string& approach,
                       int repetition, const std::string& mutant_id) {
    return SeedBuilder(base_seed)
        .add(program_id)
        .add(approach)
        .add(static_cast<std::uint64_t>(repetition))
        .add(mutant_id)
        .seed();
}

// ---------------------------------------------------------------------------
// Program corpus

std::vector<std::uint64_t> random_affine_marked_set(int num_qubits, Rng& rng) {
    if (num_qubits < 2 || num_qubits > kMaxQubits) throw std::invalid_argument("affine marked set needs 2..24 qubits");
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    std::uniform_int_distribution<std::uint64_t> nonzero(1, dim - 1);
    const std::uint64_t a = nonzero(rng);
    std::uint64_t b = nonzero(rng);
    while (b == a) b = nonzero(rng);
    std::uniform_int_distribution<int> bit(0, 1);
    const int ca = bit(rng);
    const int cb = bit(rng);

    std::vector<std::uint64_t> marked;
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (std::popcount(a & x) % 2 == ca && std::popcount(b & x) % 2 == cb) marked.push_back(x);
    }
    return marked;
}

namespace {

ProgramInstance make_program(const ExperimentConfig& config, Category cat, int size, int variant) {
    ProgramInstance p;
    p.category = cat;
    p.size = size;
    p.variant = variant;
    p.id = to_string(cat) + "-n" + std::to_string(size) + "-v" + std::to_string(variant);
    Rng rng(SeedBuilder(config.base_seed).add("program").add(p.id).seed());

    switch (cat) {
        case Category::GROV: {
            GroverSpec spec;
            spec.num_qubits = size;
            spec.marked = random_affine_marked_set(size, rng);
            const int cap = 10 * optimal_grover_iterations(std::uint64_t{1} << size, spec.marked.size());
            const auto residuals = grover_residuals(spec, std::min(cap, config.grover_max_iterations));
            std::vector<int> converged;
            for (std::size_t k = 0; k < residuals.size(); ++k)
                if (residuals[k] < kGroverResidual) converged.push_back(static_cast<int>(k) + 1);
            if (converged.empty()) {
                spec.iterations = std::nullopt;
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, converged.size() - 1);
                spec.iterations = converged[pick(rng)];
            }
            p.circuit = gen_grover(spec);
            break;
        }
        case Category::GS: {
            std::uint64_t input = 0;
            if (variant > 0) {
                std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << size) - 1);
                input = pick(rng);
            }
            p.circuit = gen_ring_graph_state(size, input);
            break;
        }
        case Category::QWALK: {
            std::uniform_int_distribution<int> steps(1, 15);
            p.circuit = gen_quantum_walk(size, steps(rng));
            break;
        }
        case Category::CUSTOM:
            throw std::invalid_argument("cannot generate CUSTOM programs");
    }
    return p;
}

}  // namespace

std::vector<ProgramInstance> generate_programs(const ExperimentConfig& config) {
    validate(config);
    std::vector<ProgramInstance> out;
    for (Category cat : config.categories) {
        const QubitRange r = config.qubit_ranges.at(cat);
        for (int size = r.min; size <= r.max; ++size)
            for (int v = 0; v < config.programs_per_size; ++v) out.push_back(make_program(config, cat, size, v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Experiment 1

namespace {

struct PreparedProgram {
    const ProgramInstance* program = nullptr;
    Statevector ps = Statevector::basis_state(1, 0);
    int depth = 0;
};

std::vector<PreparedProgram> prepare(const std::vector<ProgramInstance>& programs, int workers) {
    std::vector<PreparedProgram> out(programs.size());
    parallel_for(programs.size(), workers, [&](std::size_t i) {
        out[i].program = &programs[i];
        out[i].ps = simulate(programs[i].circuit);
        out[i].depth = depth(programs[i].circuit);
    });
    return out;
}

struct RepetitionResult {
    ReductionResult greedy;
    ReductionResult random;
    std::uint64_t greedy_seed = 0;
    std::uint64_t random_seed = 0;
};

RepetitionResult run_repetition(const PreparedProgram& p, int rep, std::uint64_t base_seed) {
    RepetitionResult out;
    out.greedy_seed = run_seed(base_seed, p.program->id, "greedy", rep);
    out.random_seed = run_seed(base_seed, p.program->id, "random", rep);
    Rng greedy_rng(out.greedy_seed);
    out.greedy = greedy_reduce(p.ps, greedy_rng);
    Rng random_rng(out.random_seed);
    out.random = random_reduce(p.ps, out.greedy.objective_calls, random_rng);
    return out;
}

ExperimentRecord base_record(int experiment, const PreparedProgram& p) {
    ExperimentRecord r;
    r.experiment = experiment;
    r.program_id = p.program->id;
    r.category = to_string(p.program->category);
    r.n_qubits = p.program->circuit.num_qubits;
    r.depth = p.depth;
    return r;
}

void fill_reduction(ExperimentRecord& r, const ReductionResult& res, bool record_timing) {
    r.mask = format_mask(res.mask);
    r.default_rank = res.default_rank;
    r.reduced_rank = res.reduced_rank;
    r.reduction_rate = reduction_rate(res.default_rank, res.reduced_rank);
    r.objective_calls = res.objective_calls;
    r.objective_calls_with_identity = res.calls_with_identity;
    r.search_time_s = record_timing ? res.wall_time_s : 0.0;
}

}  // namespace

std::vector<ExperimentRecord> run_experiment1(const ExperimentConfig& config) {
    validate(config);
    const auto programs = generate_programs(config);
    const auto prepared = prepare(programs, config.workers);
    const std::size_t reps = static_cast<std::size_t>(config.r1);

    std::vector<ExperimentRecord> records(2 * prepared.size() * reps);
    parallel_for(prepared.size() * reps, config.workers, [&](std::size_t task) {
        const auto& p = prepared[task / reps];
        const int rep = static_cast<int>(task % reps);
        const auto res = run_repetition(p, rep, config.base_seed);

        ExperimentRecord g = base_record(1, p);
        g.approach = "greedy";
        g.repetition = rep;
        fill_reduction(g, res.greedy, config.record_timing);
        g.seed = res.greedy_seed;

        ExperimentRecord r = base_record(1, p);
        r.approach = "random";
        r.repetition = rep;
        fill_reduction(r, res.random, config.record_timing);
        r.seed = res.random_seed;

        records[2 * task] = std::move(g);
        records[2 * task + 1] = std::move(r);
    });
    return records;
}

// ---------------------------------------------------------------------------
// Experiment 2

std::size_t median_run(const std::vector<ReductionResult>& results) {
    if (results.empty()) throw std::invalid_argument("median_run of no results");
    std::vector<double> rates;
    rates.reserve(results.size());
    for (const auto& r : results) rates.push_back(reduction_rate(r.default_rank, r.reduced_rank));
    std::vector<double> sorted = rates;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[(sorted.size() - 1) / 2];

    std::size_t best = results.size();
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (rates[i] != median) continue;
        if (best == results.size() || results[i].mask < results[best].mask) best = i;
    }
    return best;
}

namespace {

struct Exp2Program {
    const PreparedProgram* prepared = nullptr;
    ReductionResult greedy;
    ReductionResult random;
    TestCase default_tc;
    TestCase greedy_tc;
    TestCase random_tc;
    std::vector<std::optional<Mutant>> mutants;  ///< nullopt is the fault-free calibration run
};

constexpr const char* kApproaches[] = {"default", "greedy", "random"};

}  // namespace

std::vector<ExperimentRecord> run_experiment2(const ExperimentConfig& config) {
    validate(config);
    const auto programs = generate_programs(config);
    const auto prepared = prepare(programs, config.workers);

    std::vector<Exp2Program> setups(prepared.size());
    parallel_for(prepared.size(), config.workers, [&](std::size_t i) {
        const auto& p = prepared[i];
        auto& s = setups[i];
        s.prepared = &p;
        std::vector<ReductionResult> greedy, random;
        for (int rep = 0; rep < config.r1; ++rep) {
            auto res = run_repetition(p, rep, config.base_seed);
            greedy.push_back(std::move(res.greedy));
            random.push_back(std::move(res.random));
        }
        s.greedy = greedy[median_run(greedy)];
        s.random = random[median_run(random)];
        const std::uint64_t input = p.program->circuit.input_index;
        const int n = p.program->circuit.num_qubits;
        s.default_tc = build_test_case(p.ps, BasisMask::identity(n), input);
        s.greedy_tc = build_test_case(p.ps, s.greedy.mask, input);
        s.random_tc = build_test_case(p.ps, s.random.mask, input);

        Rng suite_rng(run_seed(config.base_seed, p.program->id, "suite", 0));
        const auto suite = generate_suite(p.program->circuit, p.program->id, config.per_op, suite_rng);
        s.mutants.push_back(std::nullopt);
        for (const auto& m : suite.mutants) s.mutants.emplace_back(m);
    });

    struct Task {
        std::size_t program;
        std::size_t mutant;
        int rep;
        int approach;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < setups.size(); ++i)
        for (std::size_t m = 0; m < setups[i].mutants.size(); ++m)
            for (int rep = 0; rep < config.r2; ++rep)
                for (int a = 0; a < 3; ++a) tasks.push_back({i, m, rep, a});

    const GammaPolicy policy{config.gamma};
    const SamplingMode mode = config.record_timing ? SamplingMode::Timed : SamplingMode::Cached;
    std::vector<ExperimentRecord> records(tasks.size());
    parallel_for(tasks.size(), config.workers, [&](std::size_t t) {
        const Task& task = tasks[t];
        const auto& s = setups[task.program];
        const auto& p = *s.prepared;
        const auto& mutant = s.mutants[task.mutant];
        const std::string mutant_id = mutant ? mutant->id() : "none";
        const Circuit sut = mutant ? apply_mutant(p.program->circuit, *mutant) : p.program->circuit;
        const std::string approach = kApproaches[task.approach];

        ExperimentRecord r = base_record(2, p);
        r.approach = approach;
        r.repetition = task.rep;
        r.mutant_id = mutant_id;
        const TestCase* tc = &s.default_tc;
        if (task.approach == 0) {
            r.mask = format_mask(s.default_tc.mask);
            r.default_rank = s.default_tc.outputs.size();
            r.reduced_rank = r.default_rank;
            r.reduction_rate = reduction_rate(r.default_rank, r.reduced_rank);
        } else {
            const ReductionResult& res = task.approach == 1 ? s.greedy : s.random;
            tc = task.approach == 1 ? &s.greedy_tc : &s.random_tc;
            fill_reduction(r, res, config.record_timing);
        }

        r.seed = run_seed(config.base_seed, p.program->id, approach, task.rep, mutant_id);
        Rng rng(r.seed);
        const TestVerdict v = run_test(sut, *tc, policy, config.alpha, rng, mode);
        r.verdict = v.failed() ? "fail" : "pass";
        r.p_value = v.p_value;
        r.shots = v.shots;
        r.test_runtime_s = config.record_timing ? v.runtime_s : 0.0;
        records[t] = std::move(r);
    });
    return records;
}

}  // namespace specred
