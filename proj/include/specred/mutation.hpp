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

// Single-gate faults placed between a program and its measurement.

#ifndef SPECRED_MUTATION_HPP
#define SPECRED_MUTATION_HPP

#include <string>
#include <vector>

#include "specred/programs.hpp"
#include "specred/random.hpp"

namespace specred {

enum class MutationOp { X, Z, RY };

std::string to_string(MutationOp op);
MutationOp parse_mutation_op(std::string_view name);

struct Mutant {
    MutationOp op = MutationOp::X;
    /// Position among the suite's mutants of the same operator.
    int index = 0;
    int qubit = 0;
    /// Rotation angle, RY only.
    double theta = 0.0;

    /// "<op><index>-q<qubit>", plus "-t<theta>" for RY, e.g. "RY2-q1-t3.141593".
    std::string id() const;
    Gate gate() const;
};

struct MutantSuite {
    std::string program_id;
    std::vector<Mutant> mutants;
};

/// per_op mutants for each of X, Z and RY, in that order. Qubits are drawn
/// uniformly from [0, n); RY angles uniformly from the open interval (0, 2pi).
MutantSuite generate_suite(const Circuit& circuit, const std::string& program_id, int per_op, Rng& rng);

/// The circuit with the mutant's gate appended after the last program gate.
Circuit apply_mutant(const Circuit& circuit, const Mutant& m);

/// Percentage of killed mutants.
double mutation_score(std::uint64_t killed, std::uint64_t total);

}  // namespace specred

#endif  // SPECRED_MUTATION_HPP
