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

// specred: reduce circuits, run the experiments, summarize results and
// generate benchmark programs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "specred/basis.hpp"
#include "specred/csv.hpp"
#include "specred/experiment.hpp"
#include "specred/programs.hpp"
#include "specred/summarize.hpp"

namespace {

using namespace specred;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

int cmd_reduce(const std::string& file, const std::string& algo, std::optional<std::uint64_t> budget,
               std::uint64_t seed, double eps) {
    const Circuit c = parse_circuit(read_file(file));
    const Statevector ps = simulate(c);
    Rng rng(seed);
    ReductionResult res;
    if (algo == "greedy") {
        res = greedy_reduce(ps, rng, eps);
    } else if (algo == "random") {
        res = random_reduce(ps, budget.value_or(theoretical_max_calls(c.num_qubits)), rng, eps);
    } else {
        res = exhaustive_reduce(ps, eps);
    }
    std::printf("algo                %s\n", algo.c_str());
    std::printf("qubits              %d\n", c.num_qubits);
    std::printf("mask                %s\n", format_mask(res.mask).c_str());
    std::printf("default_rank        %llu\n", static_cast<unsigned long long>(res.default_rank));
    std::printf("reduced_rank        %llu\n", static_cast<unsigned long long>(res.reduced_rank));
    std::printf("reduction_rate      %.6f\n", reduction_rate(res.default_rank, res.reduced_rank));
    std::printf("objective_calls     %llu\n", static_cast<unsigned long long>(res.objective_calls));
    std::printf("calls_with_identity %llu\n", static_cast<unsigned long long>(res.calls_with_identity));
    std::printf("search_time_s       %.6f\n", res.wall_time_s);
    if (algo == "greedy") {
        for (std::size_t i = 0; i < res.rounds.size(); ++i) {
            const auto& r = res.rounds[i];
            std::printf("round %zu:", i + 1);
            for (std::size_t k = 0; k < r.candidates.size(); ++k)
                std::printf(" q%d=%llu", r.candidates[k], static_cast<unsigned long long>(r.ranks[k]));
            if (r.fixed >= 0) {
                std::printf("  fixed q%d\n", r.fixed);
            } else {
                std::printf("  stop\n");
            }
        }
    }
    return 0;
}

ExperimentConfig config_with_overrides(const std::string& path, int workers, const std::string& output_dir) {
    ExperimentConfig c = load_config(path);
    if (workers > 0) c.workers = workers;
    if (!output_dir.empty()) c.output_dir = output_dir;
    validate(c);
    return c;
}

int cmd_experiment(int which, const std::string& config_path, int workers, const std::string& output_dir) {
    const ExperimentConfig c = config_with_overrides(config_path, workers, output_dir);
    const auto records = which == 1 ? run_experiment1(c) : run_experiment2(c);
    const std::string path = (std::filesystem::path(c.output_dir) / (which == 1 ? "exp1.csv" : "exp2.csv")).string();
    write_records_file(path, records);
    std::cout << "wrote " << records.size() << " records to " << path << "\n";
    return 0;
}

int cmd_summarize(const std::vector<std::string>& files, std::string out_path, double alpha) {
    const Summary s = summarize_files(files, alpha);
    std::cout << s.report;
    if (out_path.empty()) {
        const auto parent = std::filesystem::path(files.front()).parent_path();
        out_path = (parent / "summary.csv").string();
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    write_summary_csv(out, s.rows);
    std::cout << "\nsummary table: " << out_path << "\n";
    return 0;
}

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad index '" + item + "' in marked list");
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Specification reduction for quantum program testing"};
    app.require_subcommand(1);

    auto* reduce = app.add_subcommand("reduce", "Reduce a circuit's final state to a smaller basis");
    std::string reduce_file, algo = "greedy";
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 1;
    double eps = kDefaultRankCutoff;
    reduce->add_option("circuit-file", reduce_file, "Circuit text file")->required()->check(CLI::ExistingFile);
    reduce->add_option("--algo", algo, "Search algorithm")->check(CLI::IsMember({"greedy", "random", "exhaustive"}));
    reduce->add_option("--budget", budget, "Random search budget (default n(n+1)/2)")->check(CLI::PositiveNumber);
    reduce->add_option("--seed", seed, "Random seed");
    reduce->add_option("--eps", eps, "Amplitude cutoff for the rank")->check(CLI::PositiveNumber);

    std::string config_path, output_dir;
    int workers = 0;
    auto* exp1 = app.add_subcommand("exp1", "Experiment 1: reduction rate and search time");
    auto* exp2 = app.add_subcommand("exp2", "Experiment 2: mutation testing with reduced specifications");
    for (auto* sub : {exp1, exp2}) {
        sub->add_option("--config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
        sub->add_option("--workers", workers, "Override the configured worker count")->check(CLI::PositiveNumber);
        sub->add_option("--output-dir", output_dir, "Override the configured output directory");
    }

    auto* summ = app.add_subcommand("summarize", "Summarize experiment CSV files");
    std::vector<std::string> csv_files;
    std::string summary_out;
    double alpha = 0.05;
    summ->add_option("csv", csv_files, "Experiment CSV files")->required()->check(CLI::ExistingFile);
    summ->add_option("--out", summary_out, "Summary table path (default: summary.csv beside the first input)");
    summ->add_option("--alpha", alpha, "Significance level");

    auto* gen = app.add_subcommand("gen", "Emit circuit text for a benchmark program");
    gen->require_subcommand(1);
    std::string gen_out;

    auto* grov = gen->add_subcommand("grov", "Grover search");
    int grov_qubits = 3;
    std::string marked = "0";
    std::string iterations = "auto";
    grov->add_option("--qubits", grov_qubits, "Register size")->required();
    grov->add_option("--marked", marked, "Comma-separated marked indices");
    grov->add_option("--iterations", iterations, "Iteration count or 'auto'");

    auto* gs = gen->add_subcommand("gs", "Ring graph state");
    int gs_qubits = 3;
    std::uint64_t gs_input = 0;
    gs->add_option("--qubits", gs_qubits, "Register size")->required();
    gs->add_option("--input", gs_input, "Initial basis index");

    auto* qwalk = gen->add_subcommand("qwalk", "Coined walk on a cycle");
    int positions = 2, steps = 1;
    qwalk->add_option("--positions", positions, "Position qubits")->required();
    qwalk->add_option("--steps", steps, "Walk steps");

    for (auto* sub : {grov, gs, qwalk}) sub->add_option("--out", gen_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce) return cmd_reduce(reduce_file, algo, budget, seed, eps);
        if (*exp1) return cmd_experiment(1, config_path, workers, output_dir);
        if (*exp2) return cmd_experiment(2, config_path, workers, output_dir);
        if (*summ) return cmd_summarize(csv_files, summary_out, alpha);
        if (*gen) {
            Circuit c;
            if (*grov) {
                GroverSpec spec;
                spec.num_qubits = grov_qubits;
                spec.marked = parse_index_list(marked);
                if (iterations != "auto") {
                    std::size_t used = 0;
                    spec.iterations = std::stoi(iterations, &used);
                    if (used != iterations.size()) throw std::invalid_argument("bad --iterations '" + iterations + "'");
                }
                c = gen_grover(spec);
            } else if (*gs) {
                c = gen_ring_graph_state(gs_qubits, gs_input);
            } else {
                c = gen_quantum_walk(positions, steps);
            }
            write_text(gen_out, serialize_circuit(c));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
