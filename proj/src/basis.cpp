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

#include "specred/basis.hpp"

#include <bit>

namespace specred {

BasisMask BasisMask::from_ordinal(int num_qubits, std::uint64_t ordinal) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("mask qubit count " + std::to_string(num_qubits) + " out of range");
    }
    if (ordinal >> num_qubits) {
        throw std::invalid_argument("mask ordinal " + std::to_string(ordinal) + " too wide for " +
                                    std::to_string(num_qubits) + " qubits");
    }
    return BasisMask(num_qubits, ordinal);
}

BasisMask BasisMask::from_qubits(int num_qubits, const std::vector<int>& qubits) {
    BasisMask mask = identity(num_qubits);
    for (int q : qubits) mask = mask.with(q);
    return mask;
}

int BasisMask::count() const { return std::popcount(ordinal_); }

std::vector<int> BasisMask::qubits() const {
    std::vector<int> out;
    for (int q = 0; q < num_qubits_; ++q)
        if (test(q)) out.push_back(q);
    return out;
}

BasisMask BasisMask::with(int q) const {
    if (q < 0 || q >= num_qubits_) throw std::out_of_range("mask qubit " + std::to_string(q) + " out of range");
    return BasisMask(num_qubits_, ordinal_ | (std::uint64_t{1} << bit_of_qubit(q, num_qubits_)));
}

BasisMask BasisMask::without(int q) const {
    if (q < 0 || q >= num_qubits_) throw std::out_of_range("mask qubit " + std::to_string(q) + " out of range");
    return BasisMask(num_qubits_, ordinal_ & ~(std::uint64_t{1} << bit_of_qubit(q, num_qubits_)));
}

BasisMask parse_mask(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty basis mask");
    if (text.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("basis mask longer than " + std::to_string(kMaxQubits) + " qubits");
    }
    const int n = static_cast<int>(text.size());
    BasisMask mask = BasisMask::identity(n);
    for (int q = 0; q < n; ++q) {
        const char c = text[static_cast<std::size_t>(q)];
        if (c == 'h') {
            mask = mask.with(q);
        } else if (c != '1') {
            throw std::invalid_argument(std::string("illegal character '") + c + "' in basis mask at position " +
                                        std::to_string(q));
        }
    }
    return mask;
}

std::string format_mask(const BasisMask& mask) {
    std::string out(static_cast<std::size_t>(mask.num_qubits()), '1');
    for (int q = 0; q < mask.num_qubits(); ++q)
        if (mask.test(q)) out[static_cast<std::size_t>(q)] = 'h';
    return out;
}

std::uint64_t theoretical_max_calls(int num_qubits) {
    if (num_qubits < 1) throw std::invalid_argument("qubit count must be >= 1");
    const auto n = static_cast<std::uint64_t>(num_qubits);
    return n * (n + 1) / 2;
}

double reduction_rate(std::uint64_t default_rank, std::uint64_t reduced_rank) {
    if (default_rank == 0) throw std::invalid_argument("default rank must be >= 1");
    if (reduced_rank == 0) throw std::invalid_argument("reduced rank must be >= 1");
    return 100.0 * (1.0 - static_cast<double>(reduced_rank) / static_cast<double>(default_rank));
}

}  // namespace specred
