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

#include "specred/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

namespace specred {

const std::vector<std::string>& record_columns() {
    static const std::vector<std::string> columns{
        "experiment",   "program_id",      "category",       "n_qubits",
        "depth",        "approach",        "repetition",     "mask",
        "default_rank", "reduced_rank",    "reduction_rate", "objective_calls",
        "objective_calls_with_identity",   "search_time_s",  "test_runtime_s",
        "mutant_id",    "verdict",         "p_value",        "shots",
        "seed"};
    return columns;
}

std::string format_real(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot write a non-finite value to CSV");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::string format_seconds(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", seconds);
    return buf;
}

namespace {

std::string quote_if_needed(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << quote_if_needed(cells[i]);
    }
    out << '\n';
}

std::vector<std::string> to_cells(const ExperimentRecord& r) {
    return {std::to_string(r.experiment),
            r.program_id,
            r.category,
            std::to_string(r.n_qubits),
            std::to_string(r.depth),
            r.approach,
            std::to_string(r.repetition),
            r.mask,
            std::to_string(r.default_rank),
            std::to_string(r.reduced_rank),
            format_real(r.reduction_rate),
            std::to_string(r.objective_calls),
            std::to_string(r.objective_calls_with_identity),
            format_seconds(r.search_time_s),
            format_seconds(r.test_runtime_s),
            r.mutant_id,
            r.verdict,
            r.p_value ? format_real(*r.p_value) : std::string(),
            std::to_string(r.shots),
            std::to_string(r.seed)};
}

}  // namespace

void write_records(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    write_row(out, record_columns());
    for (const auto& r : records) write_row(out, to_cells(r));
}

void write_records_file(const std::string& path, const std::vector<ExperimentRecord>& records) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create directory '" + p.parent_path().string() + "': " + ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_records(out, records);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::vector<std::string> row;
    std::string cell;
    bool in_quotes = false;
    bool row_has_content = false;
    auto finish_row = [&] {
        row.push_back(std::move(cell));
        cell.clear();
        if (table.header.empty() && table.rows.empty() && !row_has_content) {
            row.clear();
            return;
        }
        if (table.header.empty()) {
            table.header = std::move(row);
        } else if (!(row.size() == 1 && row[0].empty())) {
            table.rows.push_back(std::move(row));
        }
        row.clear();
        row_has_content = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    cell += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            row_has_content = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
            row_has_content = true;
        } else if (c == '\n') {
            finish_row();
        } else if (c != '\r') {
            cell += c;
            row_has_content = true;
        }
    }
    if (in_quotes) throw SchemaError("unterminated quoted field");
    if (row_has_content || !row.empty()) finish_row();
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_csv(in);
}

void write_csv(std::ostream& out, const CsvTable& table) {
    write_row(out, table.header);
    for (const auto& row : table.rows) write_row(out, row);
}

namespace {

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
    T value{};
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw SchemaError(where + ": cannot read '" + text + "' as a number");
    return value;
}

}  // namespace

std::vector<ExperimentRecord> parse_records(const CsvTable& table, const std::string& source) {
    const auto& cols = record_columns();
    std::vector<int> idx;
    for (const auto& name : cols) {
        const int i = table.column(name);
        if (i < 0) throw SchemaError(source + ": missing column '" + name + "'");
        idx.push_back(i);
    }

    std::vector<ExperimentRecord> out;
    out.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != table.header.size()) {
            throw SchemaError(source + ": row " + std::to_string(r + 2) + " has " + std::to_string(row.size()) +
                              " fields, header has " + std::to_string(table.header.size()));
        }
        auto cell = [&](std::size_t k) -> const std::string& { return row[static_cast<std::size_t>(idx[k])]; };
        auto where = [&](std::size_t k) { return source + ": row " + std::to_string(r + 2) + " column '" + cols[k] + "'"; };
        auto num_u = [&](std::size_t k) { return parse_number<std::uint64_t>(cell(k), where(k)); };
        auto num_i = [&](std::size_t k) { return parse_number<int>(cell(k), where(k)); };
        auto num_d = [&](std::size_t k) { return parse_number<double>(cell(k), where(k)); };

        ExperimentRecord rec;
        rec.experiment = num_i(0);
        rec.program_id = cell(1);
        rec.category = cell(2);
        rec.n_qubits = num_i(3);
        rec.depth = num_i(4);
        rec.approach = cell(5);
        rec.repetition = num_i(6);
        rec.mask = cell(7);
        rec.default_rank = num_u(8);
        rec.reduced_rank = num_u(9);
        rec.reduction_rate = num_d(10);
        rec.objective_calls = num_u(11);
        rec.objective_calls_with_identity = num_u(12);
        rec.search_time_s = num_d(13);
        rec.test_runtime_s = num_d(14);
        rec.mutant_id = cell(15);
        rec.verdict = cell(16);
        if (!cell(17).empty()) rec.p_value = num_d(17);
        rec.shots = num_u(18);
        rec.seed = num_u(19);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ExperimentRecord> read_records_file(const std::string& path) {
    return parse_records(read_csv_file(path), path);
}

}  // namespace specred
