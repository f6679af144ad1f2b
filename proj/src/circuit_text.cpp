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

// Line-based circuit text:
//
//   qubits <n>
//   input <j>            (optional, default 0, before any gate)
//   h <q> | x <q> | z <q> | ry <theta> <q> | cx <c> <t> | cz <a> <b>
//   mcx <c1> ... <ck> <t>
//
// '#' starts a comment that runs to the end of the line.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "specred/programs.hpp"

namespace specred {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

class LineParser {
public:
    LineParser(int line_no, std::vector<Token> tokens) : line_(line_no), tokens_(std::move(tokens)) {}

    [[noreturn]] void fail(int column, const std::string& msg) const { throw ParseError(line_, column, msg); }

    std::size_t size() const { return tokens_.size(); }
    const Token& operator[](std::size_t i) const { return tokens_[i]; }

    std::uint64_t unsigned_at(std::size_t i, const char* what) const {
        const auto& tok = tokens_[i];
        std::uint64_t value = 0;
        const auto* first = tok.text.data();
        const auto* last = first + tok.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            fail(tok.column, std::string("malformed ") + what + " '" + std::string(tok.text) + "'");
        }
        return value;
    }

    double real_at(std::size_t i) const {
        const auto& tok = tokens_[i];
        double value = 0;
        const auto* first = tok.text.data();
        const auto* last = first + tok.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            fail(tok.column, "malformed number '" + std::string(tok.text) + "'");
        }
        return value;
    }

    int qubit_at(std::size_t i, int num_qubits) const {
        const std::uint64_t q = unsigned_at(i, "qubit index");
        if (q >= static_cast<std::uint64_t>(num_qubits)) {
            fail(tokens_[i].column, "qubit " + std::to_string(q) + " out of range");
        }
        return static_cast<int>(q);
    }

    void expect_count(std::size_t n, const std::string& gate) const {
        if (tokens_.size() != n) {
            const int col = tokens_.size() > n ? tokens_[n].column : tokens_[0].column;
            fail(col, gate + " expects " + std::to_string(n - 1) + " argument(s), got " +
                          std::to_string(tokens_.size() - 1));
        }
    }

private:
    int line_;
    std::vector<Token> tokens_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_qubits = false;
    bool have_gates = false;
    bool have_input = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        LineParser p(line_no, std::move(tokens));
        const std::string_view word = p[0].text;

        if (!have_qubits) {
            if (word != "qubits") p.fail(p[0].column, "expected 'qubits <n>' before anything else");
            p.expect_count(2, "qubits");
            const std::uint64_t n = p.unsigned_at(1, "qubit count");
            if (n < 1 || n > static_cast<std::uint64_t>(kMaxQubits)) {
                p.fail(p[1].column, "qubit count " + std::to_string(n) + " outside [1, " +
                                        std::to_string(kMaxQubits) + "]");
            }
            circuit.num_qubits = static_cast<int>(n);
            have_qubits = true;
            continue;
        }

        const int n = circuit.num_qubits;
        if (word == "qubits") p.fail(p[0].column, "duplicate 'qubits' line");
        if (word == "input") {
            if (have_gates) p.fail(p[0].column, "'input' must precede all gates");
            if (have_input) p.fail(p[0].column, "duplicate 'input' line");
            p.expect_count(2, "input");
            const std::uint64_t j = p.unsigned_at(1, "input index");
            if (j >= (std::uint64_t{1} << n)) p.fail(p[1].column, "input " + std::to_string(j) + " out of range");
            circuit.input_index = j;
            have_input = true;
            continue;
        }

        Gate gate;
        if (word == "h" || word == "x" || word == "z") {
            p.expect_count(2, std::string(word));
            const int q = p.qubit_at(1, n);
            gate = word == "h" ? Gate::h(q) : word == "x" ? Gate::x(q) : Gate::z(q);
        } else if (word == "ry") {
            p.expect_count(3, "ry");
            const double theta = p.real_at(1);
            gate = Gate::ry(theta, p.qubit_at(2, n));
        } else if (word == "cx" || word == "cz") {
            p.expect_count(3, std::string(word));
            const int a = p.qubit_at(1, n);
            const int b = p.qubit_at(2, n);
            if (a == b) p.fail(p[2].column, "duplicate qubit " + std::to_string(b));
            gate = word == "cx" ? Gate::cnot(a, b) : Gate::cz(a, b);
        } else if (word == "mcx") {
            if (p.size() < 3) p.fail(p[0].column, "mcx expects at least one control and a target");
            std::vector<int> qs;
            for (std::size_t i = 1; i < p.size(); ++i) {
                const int q = p.qubit_at(i, n);
                for (int prev : qs)
                    if (prev == q) p.fail(p[i].column, "duplicate qubit " + std::to_string(q));
                qs.push_back(q);
            }
            const int target = qs.back();
            qs.pop_back();
            gate = Gate::mcx(std::move(qs), target);
        } else {
            p.fail(p[0].column, "unknown gate '" + std::string(word) + "'");
        }
        circuit.gates.push_back(std::move(gate));
        have_gates = true;
    }

    if (!have_qubits) throw ParseError(line_no, 1, "missing 'qubits <n>' line");
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    validate(circuit);
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << '\n';
    if (circuit.input_index != 0) out << "input " << circuit.input_index << '\n';
    for (const auto& g : circuit.gates) {
        out << to_string(g.kind);
        if (g.kind == GateKind::Ry) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", g.theta);
            out << ' ' << buf;
        }
        for (int q : g.targets) out << ' ' << q;
        out << '\n';
    }
    return out.str();
}

}  // namespace specred
