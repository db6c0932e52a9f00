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

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hwenc/circuit.h"
#include "hwenc/simulator.h"

namespace hwenc {

struct CdrConfig {
    std::vector<double> replacement_rates{0.79, 0.83, 0.90, 0.95, 1.00};
    int circuits_per_rate = 50;
    long shots = 10000;
    std::uint64_t seed = 0;
};

/// The 24 single-qubit Cliffords, each as a short Rz/Ry sequence with angles that are
/// multiples of pi/4 (IR convention), distinct up to global phase.
const std::vector<std::vector<Gate>>& clifford_sequences();

/// Indices of the rotation gates (Ry, Rz, Rw) a near-Clifford copy may replace.
std::vector<std::size_t> rotation_positions(const Circuit& c);

/// For each rate r and draw, replaces ceil(r * N) uniformly chosen rotations by uniformly
/// chosen Cliffords on the same wire. Deterministic for a given config.seed.
std::vector<Circuit> near_clifford_ensemble(const Circuit& c, const CdrConfig& config);

struct TrainingSet {
    std::vector<BitString> observables;
    /// pairs[o] = (noisy, noiseless) probability of observable o for each circuit
    std::vector<std::vector<std::pair<double, double>>> pairs;
};

/// Exact and noisy probabilities of every observable for every ensemble circuit.
/// Circuit j uses the seed derive_seed(seed, j); circuits run in parallel on up to
/// `threads` workers (0 = hardware concurrency) with identical results.
TrainingSet build_training_set(const std::vector<Circuit>& ensemble, const std::vector<BitString>& observables,
                               const NoiseModel& noise, long shots, std::uint64_t seed, unsigned threads = 0);

struct RegressionFit {
    double slope = 1.0;
    double intercept = 0.0;
    bool degenerate = false;  // identity fallback used
};

RegressionFit fit_linear(const std::vector<std::pair<double, double>>& pairs);

struct Mitigation {
    std::vector<RegressionFit> fits;
    std::vector<double> mitigated;  // clamped to [0,1] and renormalized
};

/// Applies one fitted line per observable to the raw values.
Mitigation fit_and_mitigate(const TrainingSet& training, const std::vector<double>& raw);
/// Reuses existing fits.
std::vector<double> apply_fits(const std::vector<RegressionFit>& fits, const std::vector<double>& raw);

using Counts = std::map<BitString, long>;

std::vector<double> frequencies(const Counts& counts, const std::vector<BitString>& observables);

struct Band {
    double low = 0.0;
    double high = 0.0;
};

/// Multinomial resampling of the shots B times; 5th/95th percentiles (linear
/// interpolation) of each observable's frequency, optionally after `transform`.
std::vector<Band> bootstrap_bands(
    const Counts& counts, const std::vector<BitString>& observables, int resamples, std::uint64_t seed,
    const std::function<std::vector<double>(const std::vector<double>&)>& transform = nullptr);

/// Linear-interpolated percentile (q in [0,100]) of an unsorted sample.
double percentile(std::vector<double> values, double q);

}  // namespace hwenc
