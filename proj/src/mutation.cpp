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

#include "specred/mutation.hpp"

#include <cstdio>
#include <numbers>

namespace specred {

std::string to_string(MutationOp op) {
    switch (op) {
        case MutationOp::X: return "X";
        case MutationOp::Z: return "Z";
        case MutationOp::RY: return "RY";
    }
    return "X";
}

MutationOp parse_mutation_op(std::string_view name) {
    if (name == "X") return MutationOp::X;
    if (name == "Z") return MutationOp::Z;
    if (name == "RY") return MutationOp::RY;
    throw std::invalid_argument("unknown mutation operator '" + std::string(name) + "'");
}

std::string Mutant::id() const {
    std::string out = to_string(op) + std::to_string(index) + "-q" + std::to_string(qubit);
    if (op == MutationOp::RY) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "-t%.6f", theta);
        out += buf;
    }
    return out;
}

Gate Mutant::gate() const {
    switch (op) {
        case MutationOp::X: return Gate::x(qubit);
        case MutationOp::Z: return Gate::z(qubit);
        case MutationOp::RY: return Gate::ry(theta, qubit);
    }
    return Gate::x(qubit);
}

MutantSuite generate_suite(const Circuit& circuit, const std::string& program_id, int per_op, Rng& rng) {
    if (per_op < 1) throw std::invalid_argument("per_op must be >= 1");
    validate(circuit);
    MutantSuite suite;
    suite.program_id = program_id;
    std::uniform_int_distribution<int> pick_qubit(0, circuit.num_qubits - 1);
    std::uniform_real_distribution<double> pick_angle(0.0, 2.0 * std::numbers::pi);
    for (MutationOp op : {MutationOp::X, MutationOp::Z, MutationOp::RY}) {
        for (int i = 0; i < per_op; ++i) {
            Mutant m;
            m.op = op;
            m.index = i;
            m.qubit = pick_qubit(rng);
            if (op == MutationOp::RY) {
                do {
                    m.theta = pick_angle(rng);
                } while (m.theta == 0.0);
            }
            suite.mutants.push_back(m);
        }
    }
    return suite;
}

Circuit apply_mutant(const Circuit& circuit, const Mutant& m) {
    Circuit out = circuit;
    const Gate g = m.gate();
    validate_gate(g, circuit.num_qubits);
    out.gates.push_back(g);
    return out;
}

double mutation_score(std::uint64_t killed, std::uint64_t total) {
    if (total == 0) throw std::invalid_argument("mutation_score over zero mutants");
    if (killed > total) throw std::invalid_argument("more kills than mutants");
    return 100.0 * static_cast<double>(killed) / static_cast<double>(total);
}

}  // namespace specred
