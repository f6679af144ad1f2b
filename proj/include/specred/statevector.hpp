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

#ifndef SPECRED_STATEVECTOR_HPP
#define SPECRED_STATEVECTOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace specred {

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

/// Default amplitude-magnitude cutoff used when counting basis states.
inline constexpr double kDefaultRankCutoff = 1e-6;

enum class GateKind { H, X, Z, Ry, CNOT, CZ, MCX };

inline std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::Ry: return "ry";
        case GateKind::CNOT: return "cx";
        case GateKind::CZ: return "cz";
        case GateKind::MCX: return "mcx";
    }
    return "?";
}

/// A gate acting on an ordered list of qubits.
///
/// For CNOT and MCX the last entry of `targets` is the target and every
/// earlier entry is a control. `theta` is only meaningful for Ry.
template <typename Scalar>
struct BasicGate {
    GateKind kind = GateKind::H;
    std::vector<int> targets;
    Scalar theta = Scalar(0);

    static BasicGate h(int q) { return {GateKind::H, {q}, Scalar(0)}; }
    static BasicGate x(int q) { return {GateKind::X, {q}, Scalar(0)}; }
    static BasicGate z(int q) { return {GateKind::Z, {q}, Scalar(0)}; }
    static BasicGate ry(Scalar theta, int q) { return {GateKind::Ry, {q}, theta}; }
    static BasicGate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, Scalar(0)}; }
    static BasicGate cz(int a, int b) { return {GateKind::CZ, {a, b}, Scalar(0)}; }
    static BasicGate mcx(std::vector<int> controls, int target) {
        controls.push_back(target);
        return {GateKind::MCX, std::move(controls), Scalar(0)};
    }

    bool operator==(const BasicGate&) const = default;
};

using Gate = BasicGate<double>;

/// Throws std::invalid_argument unless `gate` is well formed for an n-qubit register.
template <typename Scalar>
void validate_gate(const BasicGate<Scalar>& gate, int num_qubits) {
    const auto& t = gate.targets;
    std::size_t expected_min = 1, expected_max = 1;
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::Ry:
            break;
        case GateKind::CNOT:
        case GateKind::CZ:
            expected_min = expected_max = 2;
            break;
        case GateKind::MCX:
            expected_min = 2;
            expected_max = static_cast<std::size_t>(num_qubits);
            break;
    }
    if (t.size() < expected_min || t.size() > expected_max) {
        throw std::invalid_argument(to_string(gate.kind) + " gate has wrong number of qubits (" +
                                    std::to_string(t.size()) + ")");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= num_qubits) {
            throw std::invalid_argument("qubit " + std::to_string(t[i]) + " out of range");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (t[k] == t[i]) {
                throw std::invalid_argument("duplicate qubit " + std::to_string(t[i]) + " in " +
                                            to_string(gate.kind) + " gate");
            }
        }
    }
}

/// Probability vector over the 2^n computational basis states.
template <typename Scalar>
using BasicDistribution = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Distribution = BasicDistribution<double>;

template <typename Scalar>
constexpr Scalar normalization_tolerance() {
    return std::is_same_v<Scalar, float> ? Scalar(1e-5) : Scalar(1e-9);
}

/// Bit position (from the least significant end) that holds qubit `q`.
///
/// Qubit 0 is the most significant bit of a basis index, so for n = 3 the
/// index 2 is |010>.
constexpr int bit_of_qubit(int q, int num_qubits) { return num_qubits - 1 - q; }

/// Dense n-qubit state. Immutable once constructed; every operation that
/// changes amplitudes returns a new value.
template <typename Scalar>
class BasicStatevector {
public:
    using Complex = std::complex<Scalar>;
    using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    static BasicStatevector basis_state(int num_qubits, std::uint64_t index) {
        check_qubits(num_qubits);
        const std::uint64_t dim = std::uint64_t{1} << num_qubits;
        if (index >= dim) {
            throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        Amplitudes amps = Amplitudes::Zero(static_cast<Eigen::Index>(dim));
        amps(static_cast<Eigen::Index>(index)) = Complex(1);
        return BasicStatevector(num_qubits, std::move(amps));
    }

    /// Wraps an amplitude vector, checking length and normalization.
    static BasicStatevector from_amplitudes(Amplitudes amps) {
        const auto dim = static_cast<std::uint64_t>(amps.size());
        if (dim < 2 || (dim & (dim - 1)) != 0) {
            throw std::invalid_argument("amplitude count must be a power of two >= 2");
        }
        int n = 0;
        while ((std::uint64_t{1} << n) < dim) ++n;
        check_qubits(n);
        const Scalar norm = amps.squaredNorm();
        if (std::abs(norm - Scalar(1)) > normalization_tolerance<Scalar>()) {
            throw std::invalid_argument("state is not normalized (sum |a|^2 = " + std::to_string(norm) + ")");
        }
        return BasicStatevector(n, std::move(amps));
    }

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dimension() const { return static_cast<std::uint64_t>(amps_.size()); }
    const Amplitudes& amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }

private:
    BasicStatevector(int n, Amplitudes amps) : num_qubits_(n), amps_(std::move(amps)) {}

    static void check_qubits(int n) {
        if (n < 1 || n > kMaxQubits) {
            throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                        std::to_string(kMaxQubits) + "]");
        }
    }

    int num_qubits_;
    Amplitudes amps_;
};

using Statevector = BasicStatevector<double>;

namespace detail {

template <typename Scalar>
using AmplitudeVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

// Single-qubit 2x2 update over strided index pairs (i0 has the qubit bit clear).
template <typename Scalar, typename Fn>
void for_each_pair(AmplitudeVector<Scalar>& amps, int num_qubits, int q, Fn&& fn) {
    const std::uint64_t stride = std::uint64_t{1} << bit_of_qubit(q, num_qubits);
    const auto dim = static_cast<std::uint64_t>(amps.size());
    auto* data = amps.data();
    for (std::uint64_t block = 0; block < dim; block += 2 * stride) {
        for (std::uint64_t i0 = block; i0 < block + stride; ++i0) {
            fn(data[i0], data[i0 + stride]);
        }
    }
}

template <typename Scalar>
void apply_hadamard_inplace(AmplitudeVector<Scalar>& amps, int num_qubits, int q) {
    const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
    for_each_pair<Scalar>(amps, num_qubits, q, [r](auto& a0, auto& a1) {
        const auto s = a0 + a1;
        const auto d = a0 - a1;
        a0 = s * r;
        a1 = d * r;
    });
}

/// Applies a validated gate in place.
template <typename Scalar>
void apply_gate_inplace(AmplitudeVector<Scalar>& amps, int num_qubits, const BasicGate<Scalar>& gate) {
    const auto& t = gate.targets;
    switch (gate.kind) {
        case GateKind::H:
            apply_hadamard_inplace<Scalar>(amps, num_qubits, t[0]);
            return;
        case GateKind::X:
            for_each_pair<Scalar>(amps, num_qubits, t[0], [](auto& a0, auto& a1) { std::swap(a0, a1); });
            return;
        case GateKind::Z:
            for_each_pair<Scalar>(amps, num_qubits, t[0], [](auto&, auto& a1) { a1 = -a1; });
            return;
        case GateKind::Ry: {
            const Scalar c = std::cos(gate.theta / 2);
            const Scalar s = std::sin(gate.theta / 2);
            for_each_pair<Scalar>(amps, num_qubits, t[0], [c, s](auto& a0, auto& a1) {
                const auto b0 = c * a0 - s * a1;
                const auto b1 = s * a0 + c * a1;
                a0 = b0;
                a1 = b1;
            });
            return;
        }
        case GateKind::CZ: {
            const std::uint64_t both = (std::uint64_t{1} << bit_of_qubit(t[0], num_qubits)) |
                                       (std::uint64_t{1} << bit_of_qubit(t[1], num_qubits));
            auto* data = amps.data();
            for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
                if ((i & both) == both) data[i] = -data[i];
            }
            return;
        }
        case GateKind::CNOT:
        case GateKind::MCX: {
            std::uint64_t controls = 0;
            for (std::size_t k = 0; k + 1 < t.size(); ++k) {
                controls |= std::uint64_t{1} << bit_of_qubit(t[k], num_qubits);
            }
            const std::uint64_t target = std::uint64_t{1} << bit_of_qubit(t.back(), num_qubits);
            auto* data = amps.data();
            for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
                if ((i & controls) == controls && (i & target) == 0) std::swap(data[i], data[i | target]);
            }
            return;
        }
    }
}

}  // namespace detail

template <typename Scalar>
BasicStatevector<Scalar> apply_gate(const BasicStatevector<Scalar>& state, const BasicGate<Scalar>& gate) {
    validate_gate(gate, state.num_qubits());
    auto amps = state.amplitudes();
    detail::apply_gate_inplace<Scalar>(amps, state.num_qubits(), gate);
    return BasicStatevector<Scalar>::from_amplitudes(std::move(amps));
}

template <typename Scalar>
BasicDistribution<Scalar> probabilities(const BasicStatevector<Scalar>& state) {
    return state.amplitudes().cwiseAbs2();
}

/// Number of amplitudes with magnitude strictly above `eps`.
template <typename Scalar>
std::uint64_t rank(const BasicStatevector<Scalar>& state, double eps = kDefaultRankCutoff) {
    return static_cast<std::uint64_t>((state.amplitudes().array().abs() > Scalar(eps)).count());
}

namespace detail {
template <typename Scalar>
std::uint64_t count_above(const AmplitudeVector<Scalar>& amps, double eps) {
    return static_cast<std::uint64_t>((amps.array().abs() > Scalar(eps)).count());
}
}  // namespace detail

/// Draws index j with probability |a_j|^2 from the caller-owned stream.
template <typename Scalar, typename Rng>
std::uint64_t sample_index(const BasicDistribution<Scalar>& probs, Rng& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double u = uniform(rng);
    double acc = 0.0;
    std::uint64_t last_nonzero = 0;
    for (Eigen::Index j = 0; j < probs.size(); ++j) {
        const double p = static_cast<double>(probs(j));
        if (p <= 0.0) continue;
        acc += p;
        last_nonzero = static_cast<std::uint64_t>(j);
        if (u < acc) return last_nonzero;
    }
    // Rounding left u above the accumulated mass.
    return last_nonzero;
}

template <typename Scalar, typename Rng>
std::uint64_t measure_once(const BasicStatevector<Scalar>& state, Rng& rng) {
    return sample_index<Scalar>(probabilities(state), rng);
}

}  // namespace specred

#endif  // SPECRED_STATEVECTOR_HPP
