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

// Aggregates experiment CSVs into a text report and a long-format summary
// table, per category and over all programs ("ALL").

#ifndef SPECRED_SUMMARIZE_HPP
#define SPECRED_SUMMARIZE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "specred/experiment.hpp"

namespace specred {

/// One line of the summary table.
///
/// kind is one of mean, speedup, mwu, kruskal, spearman. For mean and
/// speedup rows `value` is the mean and `spread` the standard deviation; for
/// tests `value` is the statistic (Â12 for mwu, H for kruskal, r_s for
/// spearman).
struct SummaryRow {
    std::string kind;
    int experiment = 1;
    std::string category;
    std::string metric;
    std::string group;
    std::size_t n = 0;
    double value = 0.0;
    std::optional<double> spread;
    std::optional<double> p_value;
    std::string magnitude;
    /// mwu: Greedy, Random or Equal; empty otherwise.
    std::string verdict;
};

struct Summary {
    std::string report;
    std::vector<SummaryRow> rows;
};

Summary summarize(const std::vector<ExperimentRecord>& records, double alpha = 0.05);
/// Reads and concatenates the files. Throws SchemaError on missing columns.
Summary summarize_files(const std::vector<std::string>& paths, double alpha = 0.05);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace specred

#endif  // SPECRED_SUMMARIZE_HPP
