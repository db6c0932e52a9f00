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
#include <iosfwd>
#include <optional>
#include <vector>

#include "hwenc/cdr.h"
#include "hwenc/qgaussian.h"
#include "hwenc/simulator.h"

namespace hwenc {

struct DemoConfig {
    QGaussianSpec spec;
    int n = 6;
    int k = 2;
    long shots = 10000;
    NoiseModel noise;
    bool mitigate = false;
    CdrConfig cdr;
    int bootstrap = 0;  // resamples; 0 disables the bands
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct DemoRow {
    double x = 0.0;
    BitString bits;
    double target = 0.0;
    double raw = 0.0;
    std::optional<double> mitigated;
    std::optional<Band> band;  // of the mitigated values when mitigating, else of raw
};

struct DemoResult {
    std::vector<DemoRow> rows;
    int cnot_count = 0;
    std::vector<RegressionFit> fits;
    double mean_rel_err_raw = 0.0;
    std::optional<double> mean_rel_err_mitigated;
};

/// Loads the discretized q-Gaussian with the weight-k loader, lowers it to CNOTs, samples
/// it under the noise model and optionally applies CDR and bootstrap bands.
DemoResult run_qgaussian_demo(const DemoConfig& config);

double relative_error(double value, double target);

/// x,bitstring,target,raw,mitigated,band_low,band_high,rel_err_raw,rel_err_mitigated;
/// missing values are left empty.
void write_demo_csv(std::ostream& out, const DemoResult& result);

}  // namespace hwenc
