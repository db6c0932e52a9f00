// Copyright 2026 The hwenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hwenc/circuit.h"

namespace hwenc {

/// Sparse statevector: basis word -> amplitude. Exact zeros are pruned.
struct SparseState {
    int n = 1;
    std::unordered_map<std::uint64_t, Complex> amps;

    static SparseState basis(int n, std::uint64_t word = 0);
    Complex amplitude(std::uint64_t word) const;
    Complex amplitude(const BitString& b) const { return amplitude(b.word()); }
    double norm_squared() const;
    /// Words in ascending order.
    std::vector<std::uint64_t> support() const;
};

void apply_gate(SparseState& state, const Gate& g);
void apply_action(std::vector<Complex>& dense, const GateAction& a);

SparseState run(const Circuit& c);
SparseState run(const Circuit& c, const SparseState& initial);

/// Dense-vector simulation; used for small registers and noisy trajectories.
std::vector<Complex> run_dense(const Circuit& c);

std::map<BitString, double> probabilities(const SparseState& state);

/// Multinomial draw of `shots` outcomes; deterministic for a given seed.
std::map<BitString, long> sample(const SparseState& state, long shots, std::uint64_t seed);

struct NoiseModel {
    double p2 = 0.0;  // two-qubit depolarizing probability after every CNOT
    std::uint64_t seed = 0;
};

/// Parses "depol:P" (or "none").
NoiseModel parse_noise(const std::string& spec);

/// Trajectory sampling of a CNOT-level circuit: after every CNOT a uniformly chosen
/// non-identity two-qubit Pauli hits its wires with probability p2; one trajectory per
/// shot. Uses `seed` when given, the model's seed otherwise.
std::map<BitString, long> run_noisy(const Circuit& c, const NoiseModel& noise, long shots,
                                    std::optional<std::uint64_t> seed = std::nullopt);

/// Stateless 64-bit mixer used to derive independent seeds from (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hwenc
