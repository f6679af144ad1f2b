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

// Experiment records as CSV. Reals use '.' and the shortest text that reads
// back to the same double; seconds use six decimals.

#ifndef SPECRED_CSV_HPP
#define SPECRED_CSV_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "specred/experiment.hpp"

namespace specred {

/// A required column is missing or a cell cannot be read.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Header of experiment CSV files, in column order.
const std::vector<std::string>& record_columns();

std::string format_real(double value);
std::string format_seconds(double seconds);

void write_records(std::ostream& out, const std::vector<ExperimentRecord>& records);
/// Creates missing parent directories.
void write_records_file(const std::string& path, const std::vector<ExperimentRecord>& records);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name`, or -1.
    int column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const CsvTable& table);

/// Throws SchemaError naming the first missing column or unreadable cell.
std::vector<ExperimentRecord> parse_records(const CsvTable& table, const std::string& source = "csv");
std::vector<ExperimentRecord> read_records_file(const std::string& path);

}  // namespace specred

#endif  // SPECRED_CSV_HPP
