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

#include "specred/harness.hpp"

#include <algorithm>
#include <chrono>

#include "specred/stats.hpp"

namespace specred {

bool TestCase::contains(std::uint64_t index) const {
    return std::binary_search(outputs.begin(), outputs.end(), index);
}

TestCase build_test_case(const Statevector& default_ps, const BasisMask& mask, std::uint64_t input_index,
                         double eps) {
    const auto reduced = apply_basis_transform(default_ps, mask);
    TestCase tc;
    tc.input_index = input_index;
    tc.mask = mask;
    tc.theoretical = probabilities(reduced);
    const auto& amps = reduced.amplitudes();
    for (Eigen::Index j = 0; j < amps.size(); ++j)
        if (std::abs(amps(j)) > eps) tc.outputs.push_back(static_cast<std::uint64_t>(j));
    if (tc.outputs.empty()) throw std::invalid_argument("test case has no outputs above the cutoff");
    return tc;
}

std::uint64_t sample_size(const GammaPolicy& policy, std::uint64_t n_ps) {
    if (policy.gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    if (n_ps < 1) throw std::invalid_argument("sample_size needs n_ps >= 1");
    return static_cast<std::uint64_t>(policy.gamma) * n_ps;
}

namespace {

detail::AmplitudeVector<double> final_amplitudes(const Circuit& sut, const std::vector<int>& hadamards) {
    auto amps = Statevector::basis_state(sut.num_qubits, sut.input_index).amplitudes();
    for (const auto& g : sut.gates) detail::apply_gate_inplace<double>(amps, sut.num_qubits, g);
    for (int q : hadamards) detail::apply_hadamard_inplace<double>(amps, sut.num_qubits, q);
    return amps;
}

}  // namespace

SampledRun execute_and_sample(const Circuit& sut, const BasisMask& mask, std::uint64_t shots, Rng& rng,
                              SamplingMode mode) {
    if (shots < 1) throw std::invalid_argument("execute_and_sample needs at least one shot");
    validate(sut);
    if (mask.num_qubits() != sut.num_qubits) throw std::invalid_argument("mask and circuit sizes differ");
    const auto hadamards = mask.qubits();

    SampledRun run;
    run.sample.counts.assign(std::size_t{1} << sut.num_qubits, 0);
    run.sample.total = shots;

    const auto start = std::chrono::steady_clock::now();
    if (mode == SamplingMode::Cached) {
        const Distribution probs = final_amplitudes(sut, hadamards).cwiseAbs2();
        for (std::uint64_t s = 0; s < shots; ++s) ++run.sample.counts[sample_index<double>(probs, rng)];
    } else {
        for (std::uint64_t s = 0; s < shots; ++s) {
            const Distribution probs = final_amplitudes(sut, hadamards).cwiseAbs2();
            ++run.sample.counts[sample_index<double>(probs, rng)];
        }
    }
    run.seconds = detail::seconds_since(start);
    return run;
}

int woo(std::uint64_t observed_index, const TestCase& tc) { return tc.contains(observed_index) ? 0 : 1; }

PdoResult pdo(const TestCase& tc, const SampleDistribution& sample, double alpha) {
    if (sample.total < 1) throw std::invalid_argument("pdo needs a nonempty sample");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    PdoResult out;
    if (tc.outputs.size() < 2) return out;

    std::vector<double> observed, expected;
    observed.reserve(tc.outputs.size());
    expected.reserve(tc.outputs.size());
    for (auto j : tc.outputs) {
        observed.push_back(static_cast<double>(sample.counts[j]));
        expected.push_back(tc.theoretical(static_cast<Eigen::Index>(j)));
    }
    const auto chi = stats::chi_square_gof(observed, expected);
    out.p_value = chi.p_value;
    out.failed = out.p_value < alpha;
    return out;
}

TestVerdict run_test(const Circuit& sut, const TestCase& tc, const GammaPolicy& policy, double alpha, Rng& rng,
                     SamplingMode mode) {
    if (sut.num_qubits != tc.mask.num_qubits()) throw std::invalid_argument("test case and circuit sizes differ");
    TestVerdict v;
    v.shots = sample_size(policy, tc.outputs.size());

    const auto start = std::chrono::steady_clock::now();
    const auto run = execute_and_sample(sut, tc.mask, v.shots, rng, mode);
    for (std::size_t j = 0; j < run.sample.counts.size(); ++j) {
        if (run.sample.counts[j] > 0 && woo(j, tc) == 1) {
            v.woo_failed = true;
            break;
        }
    }
    const auto fit = pdo(tc, run.sample, alpha);
    v.pdo_failed = fit.failed;
    v.p_value = fit.p_value;
    v.runtime_s = detail::seconds_since(start);
    return v;
}

}  // namespace specred
