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

#include "specred/summarize.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "specred/csv.hpp"
#include "specred/mutation.hpp"
#include "specred/stats.hpp"

namespace specred {

namespace {

constexpr const char* kAll = "ALL";

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

class Builder {
public:
    Builder(double alpha) : alpha_(alpha) {}

    void heading(const std::string& text) { report_ << "\n" << text << "\n"; }
    void line(const std::string& text) { report_ << "  " << text << "\n"; }

    void mean(int exp, const std::string& cat, const std::string& metric, const std::string& group,
              const std::vector<double>& xs, const char* number = "%.3f") {
        if (xs.empty()) return;
        SummaryRow r;
        r.kind = "mean";
        r.experiment = exp;
        r.category = cat;
        r.metric = metric;
        r.group = group;
        r.n = xs.size();
        r.value = stats::mean(xs);
        r.spread = stats::stddev(xs);
        rows_.push_back(r);
        line(pad(metric + " [" + group + "]") + fmt(number, r.value) + " +- " + fmt(number, *r.spread) +
             "  (n=" + std::to_string(r.n) + ")");
    }

    void speedup(int exp, const std::string& cat, const std::string& group, const std::vector<double>& xs) {
        if (xs.empty()) {
            line(pad("speedup [" + group + "]") + "n/a (no positive runtimes)");
            return;
        }
        SummaryRow r;
        r.kind = "speedup";
        r.experiment = exp;
        r.category = cat;
        r.metric = "test_runtime_s";
        r.group = group;
        r.n = xs.size();
        r.value = stats::mean(xs);
        r.spread = stats::stddev(xs);
        rows_.push_back(r);
        line(pad("speedup [" + group + "]") + fmt("%+.3f", r.value) + " +- " + fmt("%.3f", *r.spread) +
             "  (n=" + std::to_string(r.n) + " programs)");
    }

    void mwu(int exp, const std::string& cat, const std::string& metric, const std::vector<double>& greedy,
             const std::vector<double>& random) {
        if (greedy.empty() || random.empty()) return;
        const auto test = stats::mann_whitney_u(greedy, random);
        const auto eff = stats::vargha_delaney(greedy, random);
        SummaryRow r;
        r.kind = "mwu";
        r.experiment = exp;
        r.category = cat;
        r.metric = metric;
        r.group = "greedy_vs_random";
        r.n = greedy.size() + random.size();
        r.value = eff.a12;
        r.p_value = test.p_value;
        r.magnitude = std::string(1, stats::magnitude_letter(eff.magnitude));
        r.verdict = !stats::significant(test.p_value, eff, alpha_) ? "Equal" : (eff.a12 > 0.5 ? "Greedy" : "Random");
        rows_.push_back(r);
        line(pad("MWU " + metric + " greedy vs random") + "p=" + fmt("%.4g", test.p_value) +
             " A12=" + fmt("%.3f", eff.a12) + " (" + r.magnitude + ") -> " + r.verdict);
    }

    void kruskal(int exp, const std::string& cat, const std::string& metric,
                 const std::vector<std::vector<double>>& groups) {
        for (const auto& g : groups)
            if (g.empty()) return;
        const auto kw = stats::kruskal_wallis(groups);
        SummaryRow r;
        r.kind = "kruskal";
        r.experiment = exp;
        r.category = cat;
        r.metric = metric;
        r.group = "default_greedy_random";
        for (const auto& g : groups) r.n += g.size();
        r.value = kw.h;
        r.p_value = kw.p_value;
        rows_.push_back(r);
        line(pad("Kruskal-Wallis " + metric) + "H=" + fmt("%.3f", kw.h) + " p=" + fmt("%.4g", kw.p_value));
    }

    void spearman(int exp, const std::string& cat, const std::string& metric, const std::vector<double>& x,
                  const std::vector<double>& y) {
        if (x.size() < 3) {
            line(pad("Spearman " + metric) + "n/a (fewer than 3 programs)");
            return;
        }
        const auto c = stats::spearman(x, y);
        SummaryRow r;
        r.kind = "spearman";
        r.experiment = exp;
        r.category = cat;
        r.metric = metric;
        r.group = "greedy";
        r.n = x.size();
        r.value = c.r_s;
        r.p_value = c.p_value;
        r.magnitude = to_string(c.magnitude);
        rows_.push_back(r);
        line(pad("Spearman " + metric) + "r_s=" + fmt("%+.3f", c.r_s) + " p=" + fmt("%.4g", c.p_value) + " (" +
             r.magnitude + ")");
    }

    Summary finish() { return {report_.str(), std::move(rows_)}; }
    std::ostringstream& raw() { return report_; }

private:
    static std::string pad(std::string s) {
        if (s.size() < 44) s.resize(44, ' ');
        return s + " ";
    }

    double alpha_;
    std::ostringstream report_;
    std::vector<SummaryRow> rows_;
};

std::vector<std::string> scopes_of(const std::vector<const ExperimentRecord*>& rows) {
    std::vector<std::string> cats;
    for (const char* known : {"GROV", "GS", "QWALK"})
        for (const auto* r : rows)
            if (r->category == known) {
                cats.push_back(known);
                break;
            }
    std::set<std::string> others;
    for (const auto* r : rows)
        if (r->category != "GROV" && r->category != "GS" && r->category != "QWALK") others.insert(r->category);
    cats.insert(cats.end(), others.begin(), others.end());
    cats.push_back(kAll);
    return cats;
}

std::vector<const ExperimentRecord*> in_scope(const std::vector<const ExperimentRecord*>& rows,
                                              const std::string& scope) {
    if (scope == kAll) return rows;
    std::vector<const ExperimentRecord*> out;
    for (const auto* r : rows)
        if (r->category == scope) out.push_back(r);
    return out;
}

template <typename Pred, typename Get>
std::vector<double> collect(const std::vector<const ExperimentRecord*>& rows, Pred pred, Get get) {
    std::vector<double> out;
    for (const auto* r : rows)
        if (pred(*r)) out.push_back(get(*r));
    return out;
}

void summarize_exp1(Builder& b, const std::vector<const ExperimentRecord*>& all) {
    b.heading("Experiment 1: reduction");
    for (const auto& scope : scopes_of(all)) {
        const auto rows = in_scope(all, scope);
        b.raw() << " " << scope << "\n";
        for (const char* approach : {"greedy", "random"}) {
            auto is = [approach](const ExperimentRecord& r) { return r.approach == approach; };
            b.mean(1, scope, "reduction_rate", approach,
                   collect(rows, is, [](const ExperimentRecord& r) { return r.reduction_rate; }));
        }
        for (const char* approach : {"greedy", "random"}) {
            auto is = [approach](const ExperimentRecord& r) { return r.approach == approach; };
            b.mean(1, scope, "search_time_s", approach,
                   collect(rows, is, [](const ExperimentRecord& r) { return r.search_time_s; }), "%.6f");
        }
        {
            auto is = [](const ExperimentRecord& r) { return r.approach == "greedy"; };
            b.mean(1, scope, "objective_calls", "greedy",
                   collect(rows, is, [](const ExperimentRecord& r) { return static_cast<double>(r.objective_calls); }));
        }
        auto greedy = [](const ExperimentRecord& r) { return r.approach == "greedy"; };
        auto random = [](const ExperimentRecord& r) { return r.approach == "random"; };
        auto rate = [](const ExperimentRecord& r) { return r.reduction_rate; };
        auto time = [](const ExperimentRecord& r) { return r.search_time_s; };
        b.mwu(1, scope, "reduction_rate", collect(rows, greedy, rate), collect(rows, random, rate));
        b.mwu(1, scope, "search_time_s", collect(rows, greedy, time), collect(rows, random, time));
    }
}

// Per-program aggregates of Experiment 2.
struct ProgramStats {
    std::string category;
    double greedy_rate = 0.0;
    std::map<std::string, std::vector<double>> runtimes;  // by approach
};

void summarize_exp2(Builder& b, const std::vector<const ExperimentRecord*>& all) {
    b.heading("Experiment 2: testing");
    const char* approaches[] = {"default", "greedy", "random"};

    // Mutation scores per (program, approach, repetition), overall and by operator.
    struct ScoreKey {
        std::string program, approach;
        int rep;
        bool operator<(const ScoreKey& o) const {
            return std::tie(program, approach, rep) < std::tie(o.program, o.approach, o.rep);
        }
    };
    struct Tally {
        std::string category;
        std::map<std::string, std::pair<int, int>> by_op;  // op -> (killed, total); "" for all
    };
    std::map<ScoreKey, Tally> tallies;
    std::map<std::string, ProgramStats> programs;
    for (const auto* r : all) {
        auto& ps = programs[r->program_id];
        ps.category = r->category;
        if (r->approach == "greedy") ps.greedy_rate = r->reduction_rate;
        ps.runtimes[r->approach].push_back(r->test_runtime_s);
        if (r->mutant_id == "none") continue;
        std::string op;
        for (char c : r->mutant_id) {
            if (c < 'A' || c > 'Z') break;
            op += c;
        }
        auto& t = tallies[{r->program_id, r->approach, r->repetition}];
        t.category = r->category;
        const int killed = r->verdict == "fail" ? 1 : 0;
        t.by_op[""].first += killed;
        t.by_op[""].second += 1;
        t.by_op[op].first += killed;
        t.by_op[op].second += 1;
    }

    for (const auto& scope : scopes_of(all)) {
        const auto rows = in_scope(all, scope);
        b.raw() << " " << scope << "\n";

        std::map<std::string, std::vector<double>> score_by_approach;
        for (const char* approach : approaches) {
            for (const std::string op : {"", "X", "Z", "RY"}) {
                std::vector<double> scores;
                for (const auto& [key, t] : tallies) {
                    if (key.approach != approach || (scope != kAll && t.category != scope)) continue;
                    const auto it = t.by_op.find(op);
                    if (it == t.by_op.end()) continue;
                    scores.push_back(mutation_score(static_cast<std::uint64_t>(it->second.first),
                                                    static_cast<std::uint64_t>(it->second.second)));
                }
                b.mean(2, scope, op.empty() ? "mutation_score" : "mutation_score_" + op, approach, scores, "%.2f");
                if (op.empty()) score_by_approach[approach] = std::move(scores);
            }
        }
        for (const char* approach : approaches) {
            auto calib = [approach](const ExperimentRecord& r) {
                return r.approach == approach && r.mutant_id == "none";
            };
            b.mean(2, scope, "calibration_failure_rate", approach,
                   collect(rows, calib, [](const ExperimentRecord& r) { return r.verdict == "fail" ? 1.0 : 0.0; }));
        }
        std::map<std::string, std::vector<double>> runtime_by_approach;
        for (const char* approach : approaches) {
            auto is = [approach](const ExperimentRecord& r) { return r.approach == approach; };
            runtime_by_approach[approach] =
                collect(rows, is, [](const ExperimentRecord& r) { return r.test_runtime_s; });
            b.mean(2, scope, "test_runtime_s", approach, runtime_by_approach[approach], "%.6f");
            b.mean(2, scope, "shots", approach,
                   collect(rows, is, [](const ExperimentRecord& r) { return static_cast<double>(r.shots); }), "%.1f");
        }

        // Speedup per program from mean runtimes.
        std::vector<double> rates, greedy_speedups, greedy_scores;
        std::map<std::string, std::vector<double>> speedups;
        for (const auto& [id, ps] : programs) {
            if (scope != kAll && ps.category != scope) continue;
            auto mean_of = [&](const char* a) {
                const auto it = ps.runtimes.find(a);
                return it == ps.runtimes.end() || it->second.empty() ? 0.0 : stats::mean(it->second);
            };
            const double t_def = mean_of("default");
            for (const char* a : {"greedy", "random"}) {
                const double t_red = mean_of(a);
                if (t_def > 0.0 && t_red > 0.0) speedups[a].push_back(stats::speedup_slowdown(t_def, t_red));
            }
            const double t_greedy = mean_of("greedy");
            std::vector<double> program_scores;
            for (const auto& [key, t] : tallies) {
                if (key.program != id || key.approach != "greedy") continue;
                const auto& all_ops = t.by_op.at("");
                program_scores.push_back(mutation_score(static_cast<std::uint64_t>(all_ops.first),
                                                        static_cast<std::uint64_t>(all_ops.second)));
            }
            rates.push_back(ps.greedy_rate);
            greedy_speedups.push_back(t_def > 0.0 && t_greedy > 0.0 ? stats::speedup_slowdown(t_def, t_greedy) : 0.0);
            greedy_scores.push_back(program_scores.empty() ? 0.0 : stats::mean(program_scores));
        }
        b.speedup(2, scope, "greedy", speedups["greedy"]);
        b.speedup(2, scope, "random", speedups["random"]);

        b.kruskal(2, scope, "mutation_score",
                  {score_by_approach["default"], score_by_approach["greedy"], score_by_approach["random"]});
        b.kruskal(2, scope, "test_runtime_s",
                  {runtime_by_approach["default"], runtime_by_approach["greedy"], runtime_by_approach["random"]});
        b.mwu(2, scope, "mutation_score", score_by_approach["greedy"], score_by_approach["random"]);
        b.mwu(2, scope, "test_runtime_s", runtime_by_approach["greedy"], runtime_by_approach["random"]);

        if (speedups["greedy"].size() == rates.size()) {
            b.spearman(2, scope, "reduction_rate~speedup", rates, greedy_speedups);
        } else {
            b.line("Spearman reduction_rate~speedup               n/a (no positive runtimes)");
        }
        b.spearman(2, scope, "reduction_rate~mutation_score", rates, greedy_scores);
    }
}

}  // namespace

Summary summarize(const std::vector<ExperimentRecord>& records, double alpha) {
    std::vector<const ExperimentRecord*> exp1, exp2;
    for (const auto& r : records) {
        if (r.experiment == 1) {
            exp1.push_back(&r);
        } else if (r.experiment == 2) {
            exp2.push_back(&r);
        } else {
            throw SchemaError("unknown experiment number " + std::to_string(r.experiment));
        }
    }
    Builder b(alpha);
    b.raw() << "records: " << exp1.size() << " from experiment 1, " << exp2.size() << " from experiment 2\n";
    if (!exp1.empty()) summarize_exp1(b, exp1);
    if (!exp2.empty()) summarize_exp2(b, exp2);
    return b.finish();
}

Summary summarize_files(const std::vector<std::string>& paths, double alpha) {
    if (paths.empty()) throw std::invalid_argument("summarize needs at least one CSV file");
    std::vector<ExperimentRecord> all;
    for (const auto& path : paths) {
        auto recs = read_records_file(path);
        all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
    }
    return summarize(all, alpha);
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    CsvTable t;
    t.header = {"kind", "experiment", "category", "metric", "group", "n", "value", "spread", "p_value",
                "magnitude", "verdict"};
    for (const auto& r : rows) {
        t.rows.push_back({r.kind, std::to_string(r.experiment), r.category, r.metric, r.group, std::to_string(r.n),
                          format_real(r.value), r.spread ? format_real(*r.spread) : "",
                          r.p_value ? format_real(*r.p_value) : "", r.magnitude, r.verdict});
    }
    write_csv(out, t);
}

}  // namespace specred
