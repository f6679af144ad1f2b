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

#ifndef SPECRED_PROGRAMS_HPP
#define SPECRED_PROGRAMS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specred/statevector.hpp"

namespace specred {

enum class Category { GROV, GS, QWALK, CUSTOM };

std::string to_string(Category c);
/// Throws std::invalid_argument for unknown names.
Category parse_category(std::string_view name);

/// A program under test: gates applied in order to |input_index>.
///
/// `label` is metadata and does not take part in equality.
struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;
    std::uint64_t input_index = 0;
    Category label = Category::CUSTOM;

    bool operator==(const Circuit& other) const {
        return num_qubits == other.num_qubits && input_index == other.input_index && gates == other.gates;
    }
};

void validate(const Circuit& circuit);

/// Layered depth: each gate starts after the latest gate on any of its qubits.
int depth(const Circuit& circuit);

Statevector simulate(const Circuit& circuit);

/// Marked set plus iteration count; an empty `iterations` means AUTO.
struct GroverSpec {
    int num_qubits = 2;
    std::vector<std::uint64_t> marked;
    std::optional<int> iterations;
};

/// Largest amplitude magnitude outside the marked set that counts as converged.
inline constexpr double kGroverResidual = 1e-4;

/// round(pi/4 sqrt(N/M)), at least 1. Requires 1 <= M < N/2.
int optimal_grover_iterations(std::uint64_t search_space, std::uint64_t marked);

/// max_j∉M |a_j| after k = 1..max_iterations Grover iterations (entry k-1).
std::vector<double> grover_residuals(const GroverSpec& spec, int max_iterations);

/// Iteration count AUTO resolves to: the first k whose residual is below
/// kGroverResidual, else the cap 10 * optimal_grover_iterations.
int auto_grover_iterations(const GroverSpec& spec);

Circuit gen_grover(const GroverSpec& spec);

/// H on every qubit, then CZ along the ring (0,1), (1,2), ..., (n-1,0).
Circuit gen_ring_graph_state(int num_qubits, std::uint64_t input_index = 0);

/// Coined walk on a cycle of 2^p positions. Position qubits are 0..p-1
/// (qubit 0 most significant), the coin is qubit p.
Circuit gen_quantum_walk(int position_qubits, int steps);

/// Text format error with 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

}  // namespace specred

#endif  // SPECRED_PROGRAMS_HPP
