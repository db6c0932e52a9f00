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

#include "hwenc/demo.h"

#include <cmath>
#include <ostream>

#include "hwenc/compiler.h"
#include "hwenc/encoders.h"
#include "hwenc/error.h"

namespace hwenc {

double relative_error(double value, double target) {
    if (target == 0.0) throw InvalidArgument("relative error against a zero target");
    return std::abs(value - target) / target;
}

DemoResult run_qgaussian_demo(const DemoConfig& config) {
    const std::vector<double> xs = qgaussian_grid(config.spec);
    const std::vector<double> target = qgaussian_probabilities(config.spec);
    if (config.k < 1 || config.k >= config.n) throw InvalidArgument("demo needs 1 <= k < n");
    if (binomial(config.n, config.k) < target.size())
        throw InvalidArgument("grid has more points than weight-k basis states");
    if (config.shots < 1) throw InvalidArgument("shots must be positive");

    const EncoderReport report = encode_dense_real(config.n, config.k, discretize_qgaussian(config.spec));
    const LoweringReport lowered = lower(report.circuit);
    const std::vector<BitString>& obs = report.ordering;

    const Counts counts = run_noisy(lowered.circuit, config.noise, config.shots, derive_seed(config.seed, 0));
    const std::vector<double> raw = frequencies(counts, obs);

    DemoResult result;
    result.cnot_count = lowered.total;
    std::optional<std::vector<double>> mitigated;
    if (config.mitigate) {
        CdrConfig cdr = config.cdr;
        cdr.seed = derive_seed(config.seed, 1);
        const auto ensemble = near_clifford_ensemble(lowered.circuit, cdr);
        const TrainingSet training =
            build_training_set(ensemble, obs, config.noise, cdr.shots, derive_seed(config.seed, 2), config.threads);
        Mitigation m = fit_and_mitigate(training, raw);
        result.fits = std::move(m.fits);
        mitigated = std::move(m.mitigated);
    }
    std::vector<Band> bands;
    if (config.bootstrap > 0) {
        std::function<std::vector<double>(const std::vector<double>&)> transform;
        if (mitigated) transform = [&](const std::vector<double>& f) { return apply_fits(result.fits, f); };
        bands = bootstrap_bands(counts, obs, config.bootstrap, derive_seed(config.seed, 3), transform);
    }

    double sum_raw = 0.0, sum_mit = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        DemoRow row;
        row.x = xs[i];
        row.bits = obs[i];
        row.target = target[i];
        row.raw = raw[i];
        sum_raw += relative_error(raw[i], target[i]);
        if (mitigated) {
            row.mitigated = (*mitigated)[i];
            sum_mit += relative_error((*mitigated)[i], target[i]);
        }
        if (!bands.empty()) row.band = bands[i];
        result.rows.push_back(row);
    }
    result.mean_rel_err_raw = sum_raw / target.size();
    if (mitigated) result.mean_rel_err_mitigated = sum_mit / target.size();
    return result;
}

void write_demo_csv(std::ostream& out, const DemoResult& result) {
    const auto saved = out.precision(10);
    out << "x,bitstring,target,raw,mitigated,band_low,band_high,rel_err_raw,rel_err_mitigated\n";
    for (const DemoRow& r : result.rows) {
        out << r.x << ',' << r.bits.to_string() << ',' << r.target << ',' << r.raw << ',';
        if (r.mitigated) out << *r.mitigated;
        out << ',';
        if (r.band) out << r.band->low << ',' << r.band->high;
        else out << ',';
        out << ',' << relative_error(r.raw, r.target) << ',';
        if (r.mitigated) out << relative_error(*r.mitigated, r.target);
        out << '\n';
    }
    out.precision(saved);
}

}  // namespace hwenc
