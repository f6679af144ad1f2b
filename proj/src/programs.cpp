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

#include "specred/programs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace specred {

std::string to_string(Category c) {
    switch (c) {
        case Category::GROV: return "GROV";
        case Category::GS: return "GS";
        case Category::QWALK: return "QWALK";
        case Category::CUSTOM: return "CUSTOM";
    }
    return "CUSTOM";
}

Category parse_category(std::string_view name) {
    if (name == "GROV") return Category::GROV;
    if (name == "GS") return Category::GS;
    if (name == "QWALK") return Category::QWALK;
    if (name == "CUSTOM") return Category::CUSTOM;
    throw std::invalid_argument("unknown category '" + std::string(name) + "'");
}

void validate(const Circuit& circuit) {
    if (circuit.num_qubits < 1 || circuit.num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count " + std::to_string(circuit.num_qubits) + " out of range");
    }
    if (circuit.input_index >= (std::uint64_t{1} << circuit.num_qubits)) {
        throw std::invalid_argument("input index " + std::to_string(circuit.input_index) + " out of range");
    }
    for (const auto& g : circuit.gates) validate_gate(g, circuit.num_qubits);
}

int depth(const Circuit& circuit) {
    std::vector<int> level(static_cast<std::size_t>(circuit.num_qubits), 0);
    int deepest = 0;
    for (const auto& g : circuit.gates) {
        int start = 0;
        for (int q : g.targets) start = std::max(start, level[static_cast<std::size_t>(q)]);
        for (int q : g.targets) level[static_cast<std::size_t>(q)] = start + 1;
        deepest = std::max(deepest, start + 1);
    }
    return deepest;
}

Statevector simulate(const Circuit& circuit) {
    validate(circuit);
    auto amps = Statevector::basis_state(circuit.num_qubits, circuit.input_index).amplitudes();
    for (const auto& g : circuit.gates) detail::apply_gate_inplace<double>(amps, circuit.num_qubits, g);
    return Statevector::from_amplitudes(std::move(amps));
}

// ---------------------------------------------------------------------------
// Grover search

namespace {

void check_grover_spec(const GroverSpec& spec) {
    if (spec.num_qubits < 2 || spec.num_qubits > kMaxQubits) {
        throw std::invalid_argument("Grover search needs 2.." + std::to_string(kMaxQubits) + " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << spec.num_qubits;
    if (spec.marked.empty()) throw std::invalid_argument("Grover marked set is empty");
    if (2 * spec.marked.size() >= dim) {
        throw std::invalid_argument("Grover marked set of size " + std::to_string(spec.marked.size()) +
                                    " must be smaller than N/2 = " + std::to_string(dim / 2));
    }
    std::set<std::uint64_t> seen;
    for (auto m : spec.marked) {
        if (m >= dim) throw std::invalid_argument("marked index " + std::to_string(m) + " out of range");
        if (!seen.insert(m).second) throw std::invalid_argument("marked index " + std::to_string(m) + " repeated");
    }
    if (spec.iterations && *spec.iterations < 0) throw std::invalid_argument("negative Grover iteration count");
}

// Phase flip of |1...1> on all qubits: H, multi-controlled X, H on the last qubit.
void append_all_ones_phase(std::vector<Gate>& gates, int n) {
    const int target = n - 1;
    gates.push_back(Gate::h(target));
    if (n == 2) {
        gates.push_back(Gate::cnot(0, target));
    } else {
        std::vector<int> controls(static_cast<std::size_t>(n - 1));
        for (int q = 0; q < n - 1; ++q) controls[static_cast<std::size_t>(q)] = q;
        gates.push_back(Gate::mcx(std::move(controls), target));
    }
    gates.push_back(Gate::h(target));
}

// Flips the sign of |marked> by conjugating the all-ones phase with X on zero bits.
void append_phase_oracle(std::vector<Gate>& gates, int n, std::uint64_t marked) {
    std::vector<int> zeros;
    for (int q = 0; q < n; ++q)
        if (((marked >> bit_of_qubit(q, n)) & 1U) == 0) zeros.push_back(q);
    for (int q : zeros) gates.push_back(Gate::x(q));
    append_all_ones_phase(gates, n);
    for (int q : zeros) gates.push_back(Gate::x(q));
}

void append_diffusion(std::vector<Gate>& gates, int n) {
    for (int q = 0; q < n; ++q) gates.push_back(Gate::h(q));
    for (int q = 0; q < n; ++q) gates.push_back(Gate::x(q));
    append_all_ones_phase(gates, n);
    for (int q = 0; q < n; ++q) gates.push_back(Gate::x(q));
    for (int q = 0; q < n; ++q) gates.push_back(Gate::h(q));
}

std::vector<Gate> grover_iteration(const GroverSpec& spec) {
    std::vector<Gate> gates;
    for (auto m : spec.marked) append_phase_oracle(gates, spec.num_qubits, m);
    append_diffusion(gates, spec.num_qubits);
    return gates;
}

}  // namespace

int optimal_grover_iterations(std::uint64_t search_space, std::uint64_t marked) {
    if (marked < 1 || 2 * marked >= search_space) {
        throw std::invalid_argument("need 1 <= M < N/2, got N=" + std::to_string(search_space) +
                                    " M=" + std::to_string(marked));
    }
    const double k = std::numbers::pi / 4.0 *
                     std::sqrt(static_cast<double>(search_space) / static_cast<double>(marked));
    return std::max(1, static_cast<int>(std::lround(k)));
}

std::vector<double> grover_residuals(const GroverSpec& spec, int max_iterations) {
    check_grover_spec(spec);
    const int n = spec.num_qubits;
    const auto iteration = grover_iteration(spec);
    std::vector<bool> is_marked(std::size_t{1} << n, false);
    for (auto m : spec.marked) is_marked[m] = true;

    auto amps = Statevector::basis_state(n, 0).amplitudes();
    for (int q = 0; q < n; ++q) detail::apply_hadamard_inplace<double>(amps, n, q);

    std::vector<double> residuals;
    residuals.reserve(static_cast<std::size_t>(std::max(0, max_iterations)));
    for (int k = 1; k <= max_iterations; ++k) {
        for (const auto& g : iteration) detail::apply_gate_inplace<double>(amps, n, g);
        double worst = 0.0;
        for (Eigen::Index j = 0; j < amps.size(); ++j)
            if (!is_marked[static_cast<std::size_t>(j)]) worst = std::max(worst, std::abs(amps(j)));
        residuals.push_back(worst);
    }
    return residuals;
}

int auto_grover_iterations(const GroverSpec& spec) {
    check_grover_spec(spec);
    const int cap = 10 * optimal_grover_iterations(std::uint64_t{1} << spec.num_qubits, spec.marked.size());
    const auto residuals = grover_residuals(spec, cap);
    for (std::size_t i = 0; i < residuals.size(); ++i)
        if (residuals[i] < kGroverResidual) return static_cast<int>(i) + 1;
    return cap;
}

Circuit gen_grover(const GroverSpec& spec) {
    check_grover_spec(spec);
    const int n = spec.num_qubits;
    const int k = spec.iterations ? *spec.iterations : auto_grover_iterations(spec);

    Circuit c;
    c.num_qubits = n;
    c.label = Category::GROV;
    for (int q = 0; q < n; ++q) c.gates.push_back(Gate::h(q));
    const auto iteration = grover_iteration(spec);
    for (int i = 0; i < k; ++i) c.gates.insert(c.gates.end(), iteration.begin(), iteration.end());
    return c;
}

// ---------------------------------------------------------------------------
// Graph states

Circuit gen_ring_graph_state(int num_qubits, std::uint64_t input_index) {
    if (num_qubits < 3) throw std::invalid_argument("ring graph needs at least 3 qubits");
    if (num_qubits > kMaxQubits) throw std::invalid_argument("ring graph qubit count too large");
    Circuit c;
    c.num_qubits = num_qubits;
    c.input_index = input_index;
    c.label = Category::GS;
    for (int q = 0; q < num_qubits; ++q) c.gates.push_back(Gate::h(q));
    for (int q = 0; q < num_qubits; ++q) c.gates.push_back(Gate::cz(q, (q + 1) % num_qubits));
    validate(c);
    return c;
}

// ---------------------------------------------------------------------------
// Quantum walk

namespace {

// Adds 1 mod 2^p to the position register when the coin is |1>. Higher bits
// flip first, each conditioned on every lower bit being 1.
std::vector<Gate> controlled_increment(int position_qubits, int coin) {
    std::vector<Gate> gates;
    for (int t = 0; t < position_qubits; ++t) {
        std::vector<int> controls{coin};
        for (int lower = t + 1; lower < position_qubits; ++lower) controls.push_back(lower);
        if (controls.size() == 1) {
            gates.push_back(Gate::cnot(coin, t));
        } else {
            gates.push_back(Gate::mcx(std::move(controls), t));
        }
    }
    return gates;
}

}  // namespace

Circuit gen_quantum_walk(int position_qubits, int steps) {
    if (position_qubits < 2) throw std::invalid_argument("quantum walk needs at least 2 position qubits");
    if (position_qubits + 1 > kMaxQubits) throw std::invalid_argument("quantum walk register too large");
    if (steps < 1) throw std::invalid_argument("quantum walk needs at least 1 step");

    const int coin = position_qubits;
    const auto increment = controlled_increment(position_qubits, coin);

    Circuit c;
    c.num_qubits = position_qubits + 1;
    c.label = Category::QWALK;
    for (int s = 0; s < steps; ++s) {
        c.gates.push_back(Gate::h(coin));
        c.gates.insert(c.gates.end(), increment.begin(), increment.end());
        // Coin |0>: decrement, the increment run backwards under a flipped coin.
        c.gates.push_back(Gate::x(coin));
        c.gates.insert(c.gates.end(), increment.rbegin(), increment.rend());
        c.gates.push_back(Gate::x(coin));
    }
    return c;
}

}  // namespace specred
