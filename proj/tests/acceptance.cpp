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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails. Usage: acceptance [path-to-specred-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "specred/basis.hpp"
#include "specred/csv.hpp"
#include "specred/experiment.hpp"
#include "specred/harness.hpp"
#include "specred/mutation.hpp"
#include "specred/stats.hpp"
#include "stats_oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace specred;
namespace fs = std::filesystem;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    const char* title;
    double limit_s;
    std::function<Outcome()> check;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool same_state(const Statevector& a, const Statevector& b, double tol) {
    return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

Outcome worked_examples() {
    using testing::signed_uniform;
    const auto ps = testing::running_example();
    const std::map<std::string, Statevector> want{
        {"h11", signed_uniform(3, {{0, 1}, {1, 1}, {6, 1}, {7, -1}})},
        {"11h", signed_uniform(3, {{0, 1}, {3, 1}, {4, 1}, {7, -1}})},
        {"1h1", signed_uniform(3, {{0, 1}, {3, 1}, {5, 1}, {6, 1}})},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [mask, expected] : want) {
        const auto got = apply_basis_transform(ps, parse_mask(mask));
        const bool match = same_state(got, expected, 1e-12) && rank(got) == 4;
        ok = ok && match;
        detail += mask + (match ? " ok, " : " MISMATCH, ");
    }
    // The state written in the mixed basis: (|+0+> + |-1->)/sqrt(2).
    const double r = 1.0 / std::sqrt(2.0);
    testing::CVector plus(2), minus(2), zero(2), one(2);
    plus << r, r;
    minus << r, -r;
    zero << 1, 0;
    one << 0, 1;
    const testing::CVector mixed =
        r * (testing::kron(testing::kron(plus, zero), plus) + testing::kron(testing::kron(minus, one), minus));
    const bool expansion = (mixed - ps.amplitudes()).cwiseAbs().maxCoeff() <= 1e-12;
    const auto h1h = apply_basis_transform(ps, parse_mask("h1h"));
    const bool h1h_ok = rank(h1h) == 2 && same_state(h1h, signed_uniform(3, {{0, 1}, {7, 1}}), 1e-12);
    ok = ok && expansion && h1h_ok;
    detail += std::string("mixed-basis expansion ") + (expansion ? "ok" : "MISMATCH") + ", h1h rank " +
              std::to_string(rank(h1h));
    return {ok, detail};
}

Outcome greedy_running_example() {
    const auto ps = testing::running_example();
    std::map<std::uint64_t, int> ranks;
    int violations = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        Rng rng(seed);
        const auto res = greedy_reduce(ps, rng);
        ++ranks[res.reduced_rank];
        const auto order = res.fixed_order();
        const bool first_is_one = !order.empty() && order.front() == 1;
        if ((res.reduced_rank == 4) != first_is_one) ++violations;
    }
    const auto exhaustive = exhaustive_reduce(ps);
    const bool only_2_4 = ranks.size() <= 2 && ranks.count(2) + ranks.count(4) == ranks.size();
    const bool ok = only_2_4 && violations == 0 && exhaustive.reduced_rank == 2;
    return {ok, "rank 2: " + std::to_string(ranks[2]) + ", rank 4: " + std::to_string(ranks[4]) +
                    ", other: " + std::to_string(10000 - ranks[2] - ranks[4]) +
                    ", rank-4/first-qubit-1 mismatches: " + std::to_string(violations) +
                    ", exhaustive min " + std::to_string(exhaustive.reduced_rank)};
}

Outcome example_a() {
    const auto ps = testing::example_a();
    const auto target = parse_mask("1hhh1");
    int hits = 0;
    std::map<std::uint64_t, int> ranks;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        const auto res = greedy_reduce(ps, rng);
        hits += res.mask == target;
        ++ranks[res.reduced_rank];
    }
    const auto target_rank = rank(apply_basis_transform(ps, target));
    const auto ex = exhaustive_reduce(ps);
    std::string dist;
    for (const auto& [r, c] : ranks) dist += " " + std::to_string(r) + ":" + std::to_string(c);
    return {hits == 0 && target_rank == 4,
            "1hhh1 returned " + std::to_string(hits) + " times, rank under 1hhh1 = " + std::to_string(target_rank) +
                ", exhaustive min " + std::to_string(ex.reduced_rank) + " via " + format_mask(ex.mask) +
                ", greedy ranks" + dist};
}

Outcome call_bound() {
    Rng rng(4242);
    std::uniform_int_distribution<int> size(2, 10);
    int violations = 0;
    std::uint64_t worst = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = size(rng);
        const auto ps = testing::random_real_uniform(n, rng);
        const auto res = greedy_reduce(ps, rng);
        if (res.objective_calls > theoretical_max_calls(n)) ++violations;
        worst = std::max(worst, res.objective_calls);
    }
    return {violations == 0, "violations " + std::to_string(violations) + " of 500, largest call count " +
                                 std::to_string(worst)};
}

/// 20 programs from the desk-scale corpus, chosen by a seeded shuffle.
std::vector<ProgramInstance> twenty_programs() {
    auto programs = generate_programs(ExperimentConfig{});
    Rng rng(20);
    std::shuffle(programs.begin(), programs.end(), rng);
    programs.resize(20);
    return programs;
}

BasisMask median_greedy_mask(const Statevector& ps, const std::string& id) {
    std::vector<ReductionResult> runs;
    for (int rep = 0; rep < 100; ++rep) {
        Rng rng(run_seed(2024, id, "greedy", rep));
        runs.push_back(greedy_reduce(ps, rng));
    }
    return runs[median_run(runs)].mask;
}

Outcome phase_flip() {
    int def_runs = 0, def_kills = 0, red_runs = 0, red_kills = 0, masked_mutants = 0;
    for (const auto& p : twenty_programs()) {
        const auto ps = simulate(p.circuit);
        const int n = p.circuit.num_qubits;
        const auto mask = median_greedy_mask(ps, p.id);
        const auto def_tc = build_test_case(ps, BasisMask::identity(n), p.circuit.input_index);
        const auto red_tc = build_test_case(ps, mask, p.circuit.input_index);
        for (int q = 0; q < n; ++q) {
            const Mutant m{MutationOp::Z, q, q, 0.0};
            const auto sut = apply_mutant(p.circuit, m);
            masked_mutants += mask.test(q);
            for (int rep = 0; rep < 30; ++rep) {
                Rng a(run_seed(5, p.id, "default", rep, m.id()));
                ++def_runs;
                def_kills += run_test(sut, def_tc, {10}, 0.05, a, SamplingMode::Cached).failed();
                if (mask.test(q)) {
                    Rng b(run_seed(5, p.id, "greedy", rep, m.id()));
                    ++red_runs;
                    red_kills += run_test(sut, red_tc, {10}, 0.05, b, SamplingMode::Cached).failed();
                }
            }
        }
    }
    const double def_rate = static_cast<double>(def_kills) / def_runs;
    const double red_rate = red_runs ? static_cast<double>(red_kills) / red_runs : 0.0;
    return {def_rate <= 0.07 && red_runs > 0 && red_rate >= 0.90,
            "default kill rate " + fmt("%.4f", def_rate) + " over " + std::to_string(def_runs) +
                " runs, reduced kill rate on H-masked qubits " + fmt("%.4f", red_rate) + " over " +
                std::to_string(red_runs) + " runs (" + std::to_string(masked_mutants) + " mutants)"};
}

Outcome shot_reduction() {
    // Shot ratios from an Experiment 2 run over the desk-scale corpus.
    ExperimentConfig c;
    c.r1 = 20;
    c.r2 = 2;
    c.per_op = 1;
    c.record_timing = false;
    const auto records = run_experiment2(c);
    std::map<std::pair<std::string, int>, std::uint64_t> default_shots;
    for (const auto& r : records)
        if (r.approach == "default") default_shots[{r.program_id + "|" + r.mutant_id, r.repetition}] = r.shots;
    int ratio_checks = 0, ratio_failures = 0;
    for (const auto& r : records) {
        if (r.approach == "default") continue;
        ++ratio_checks;
        const double ratio = static_cast<double>(r.shots) /
                             static_cast<double>(default_shots.at({r.program_id + "|" + r.mutant_id, r.repetition}));
        if (ratio != 1.0 - r.reduction_rate / 100.0) ++ratio_failures;
    }

    // Timed runs on n = 6 Grover programs with depth >= 100.
    Rng rng(66);
    double total_def = 0.0, total_red = 0.0;
    std::string speeds;
    for (int v = 0; v < 3; ++v) {
        GroverSpec spec{6, random_affine_marked_set(6, rng), 1};
        while (depth(gen_grover(spec)) < 100) *spec.iterations += 3;
        const auto circuit = gen_grover(spec);
        const auto ps = simulate(circuit);
        const auto id = "GROV-n6-acc" + std::to_string(v);
        const auto mask = median_greedy_mask(ps, id);
        const auto def_tc = build_test_case(ps, BasisMask::identity(6), 0);
        const auto red_tc = build_test_case(ps, mask, 0);
        double t_def = 0.0, t_red = 0.0;
        for (int rep = 0; rep < 30; ++rep) {
            Rng a(run_seed(6, id, "default", rep)), b(run_seed(6, id, "greedy", rep));
            t_def += run_test(circuit, def_tc, {10}, 0.05, a).runtime_s;
            t_red += run_test(circuit, red_tc, {10}, 0.05, b).runtime_s;
        }
        const double s = stats::speedup_slowdown(t_def, t_red);
        total_def += t_def;
        total_red += t_red;
        speeds += " " + fmt("%+.2f", s) + " (depth " + std::to_string(depth(circuit)) + ", ranks " +
                  std::to_string(def_tc.outputs.size()) + "->" + std::to_string(red_tc.outputs.size()) + ")";
    }
    const double mean_speedup = stats::speedup_slowdown(total_def, total_red);
    return {ratio_failures == 0 && mean_speedup > 2.0,
            "shot ratio mismatches " + std::to_string(ratio_failures) + " of " + std::to_string(ratio_checks) +
                ", GROV n=6 mean speedup " + fmt("%+.2f", mean_speedup) + ", per program" + speeds};
}

Outcome pdo_calibration() {
    const auto programs = generate_programs(ExperimentConfig{});
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto& p = programs[seed % programs.size()];
        const auto ps = simulate(p.circuit);
        const int n = p.circuit.num_qubits;
        Rng pick(seed);
        const auto mask = seed % 2 ? greedy_reduce(ps, pick).mask : BasisMask::identity(n);
        const auto tc = build_test_case(ps, mask, p.circuit.input_index);
        Rng rng(run_seed(7, p.id, "calibration", static_cast<int>(seed)));
        failures += run_test(p.circuit, tc, {10}, 0.05, rng, SamplingMode::Cached).failed();
    }
    const auto tc = build_test_case(testing::running_example(), parse_mask("h11"), 0);
    SampleDistribution s;
    s.counts = {7, 12, 0, 0, 0, 0, 11, 10};
    s.total = 40;
    const auto fit = pdo(tc, s, 0.05);
    const double rate = failures / 1000.0;
    return {rate <= 0.07 && std::abs(fit.p_value - 0.7055) <= 1e-3 && !fit.failed,
            "fault-free failure rate " + fmt("%.3f", rate) + ", p({7,12,11,10}) = " + fmt("%.6f", fit.p_value)};
}

Outcome stats_oracles() {
    Rng rng(8);
    std::uniform_int_distribution<int> size(2, 8), levels(3, 12);
    auto draw = [&](std::size_t n, int lv, double shift) {
        std::uniform_int_distribution<int> d(0, lv - 1);
        std::vector<double> v(n);
        for (auto& x : v) x = d(rng) + shift;
        return v;
    };
    int exact_failures = 0, mwu = 0, kw = 0, sp = 0;
    for (int i = 0; i < 200; ++i) {
        const int lv = levels(rng);
        const double shift = (i % 4) * 0.4 * lv;
        const auto a = draw(static_cast<std::size_t>(size(rng)), lv, 0.0);
        const auto b = draw(static_cast<std::size_t>(size(rng)), lv, shift);
        const auto c = draw(static_cast<std::size_t>(size(rng)), lv, shift / 2);
        // Spearman pairs: 3 to 8 pairs, y partly driven by x.
        const std::size_t m = static_cast<std::size_t>(std::max(3, size(rng)));
        const auto x = draw(m, lv, 0.0);
        auto y = draw(m, lv, 0.0);
        for (std::size_t k = 0; k < m; ++k) y[k] += (i % 4) * 0.4 * x[k];

        exact_failures += std::abs(stats::vargha_delaney(a, b).a12 - testing::oracle_a12(a, b)) > 1e-12;
        exact_failures += std::abs(stats::mann_whitney_u(a, b).u - testing::pairwise_wins(a, b)) > 1e-9;
        exact_failures +=
            std::abs(stats::kruskal_wallis({a, b, c}).h - std::max(0.0, testing::oracle_kw_h({a, b, c}))) > 1e-9;
        exact_failures += std::abs(stats::spearman(x, y).r_s - testing::oracle_spearman_pearson(x, y)) > 1e-12;
        bool ties = false;
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = k + 1; l < m; ++l) ties = ties || x[k] == x[l] || y[k] == y[l];
        if (!ties) exact_failures += std::abs(stats::spearman(x, y).r_s - testing::oracle_spearman_formula(x, y)) > 1e-12;

        mwu += (stats::mann_whitney_u(a, b).p_value <= 0.05) == (testing::oracle_mwu_exact_p(a, b) <= 0.05);
        kw += (stats::kruskal_wallis({a, b, c}).p_value <= 0.05) ==
              (testing::oracle_kw_permutation_p({a, b, c}, 2000, rng) <= 0.05);
        sp += (stats::spearman(x, y).p_value <= 0.05) == (testing::oracle_spearman_exact_p(x, y) <= 0.05);
    }
    // Decision agreement bar: 95% of cases, as for the two-group Kruskal-Wallis check.
    const bool ok = exact_failures == 0 && mwu >= 190 && kw >= 190 && sp >= 190;
    return {ok, "exact mismatches " + std::to_string(exact_failures) + ", decision agreement over 200: MWU " +
                    std::to_string(mwu) + ", KW " + std::to_string(kw) + ", Spearman " + std::to_string(sp) +
                    " (need 190 each)"};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    write_records(out, records);
    return out.str();
}

Outcome determinism(const std::string& cli) {
    ExperimentConfig c;
    c.record_timing = false;
    const auto dir = fs::temp_directory_path() / "specred_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::map<std::string, std::string> outputs;
    bool ok = true;
    std::string how;
    for (int workers : {1, 8}) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            c.workers = workers;
            const auto out = dir / ("w" + std::to_string(workers) + "-" + std::to_string(attempt));
            c.output_dir = out.string();
            std::string e1, e2;
            if (!cli.empty()) {
                const auto cfg = dir / "config.json";
                std::ofstream(cfg) << config_to_json(c);
                for (const char* which : {"exp1", "exp2"}) {
                    const std::string cmd = "\"" + cli + "\" " + which + " --config \"" + cfg.string() + "\" > \"" +
                                            (dir / "log.txt").string() + "\" 2>&1";
                    ok = ok && std::system(cmd.c_str()) == 0;
                }
                e1 = slurp(out / "exp1.csv");
                e2 = slurp(out / "exp2.csv");
                how = "CLI";
            } else {
                e1 = records_csv(run_experiment1(c));
                e2 = records_csv(run_experiment2(c));
                how = "library";
            }
            ok = ok && !e1.empty() && !e2.empty();
            for (const auto& [name, text] : {std::pair{"exp1", e1}, std::pair{"exp2", e2}}) {
                auto [it, inserted] = outputs.emplace(name, text);
                ok = ok && (inserted || it->second == text);
            }
        }
    }
    fs::remove_all(dir);
    return {ok, "exp1 " + std::to_string(outputs["exp1"].size()) + " bytes, exp2 " +
                    std::to_string(outputs["exp2"].size()) + " bytes, identical across workers {1,8} x 2 runs via " +
                    how};
}

Outcome greedy_beats_random() {
    ExperimentConfig c;
    c.programs_per_size = 10;
    c.record_timing = false;
    const auto records = run_experiment1(c);
    std::map<std::string, std::map<std::string, std::pair<double, int>>> sums;
    std::map<std::string, std::set<std::string>> programs;
    for (const auto& r : records) {
        auto& s = sums[r.category][r.approach];
        s.first += r.reduction_rate;
        s.second += 1;
        programs[r.category].insert(r.program_id);
    }
    bool ok = true;
    std::string detail;
    for (const auto& [cat, by] : sums) {
        const double g = by.at("greedy").first / by.at("greedy").second;
        const double rnd = by.at("random").first / by.at("random").second;
        ok = ok && g >= rnd && programs[cat].size() >= 20;
        detail += cat + " greedy " + fmt("%.2f", g) + " vs random " + fmt("%.2f", rnd) + " (" +
                  std::to_string(programs[cat].size()) + " programs); ";
    }
    return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<Criterion> criteria{
        {1, "worked-example masks", 1.0, worked_examples},
        {2, "greedy on the running example", 10.0, greedy_running_example},
        {3, "greedy cannot reach 1hhh1", 10.0, example_a},
        {4, "greedy call bound", 30.0, call_bound},
        {5, "phase-flip blindness and detection", 300.0, phase_flip},
        {6, "shot-count reduction and speedup", 600.0, shot_reduction},
        {7, "PDO calibration", 120.0, pdo_calibration},
        {8, "statistics oracle equivalence", 60.0, stats_oracles},
        {9, "determinism across worker counts", 300.0, [&cli] { return determinism(cli); }},
        {10, "greedy reduction >= random reduction", 600.0, greedy_beats_random},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("%s criterion %d: %s | %s | %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.number,
                    c.title, o.detail.c_str(), secs, c.limit_s, in_time ? "" : " TIME EXCEEDED");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
