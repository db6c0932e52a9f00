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

#include "hwenc/qgaussian.h"

#include <cmath>

#include "hwenc/error.h"

namespace hwenc {

void QGaussianSpec::validate() const {
    if (!(q < 3.0)) throw InvalidArgument("q must be below 3");
    if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
    if (!(lo < hi)) throw InvalidArgument("interval must satisfy lo < hi");
    if (points < 2) throw InvalidArgument("at least 2 grid points are required");
}

double q_exponential(double x, double q) {
    if (!(q < 3.0)) throw InvalidArgument("q must be below 3");
    if (q == 1.0) return std::exp(x);
    const double u = (1.0 - q) * x;
    if (u <= -1.0) return 0.0;
    return std::exp(std::log1p(u) / (1.0 - q));  // log1p keeps q near 1 accurate
}

std::vector<double> qgaussian_grid(const QGaussianSpec& spec) {
    spec.validate();
    std::vector<double> xs(spec.points);
    const double step = (spec.hi - spec.lo) / (spec.points - 1);
    for (int i = 0; i < spec.points; ++i) xs[i] = spec.lo + step * i;
    xs.back() = spec.hi;
    return xs;
}

std::vector<double> qgaussian_probabilities(const QGaussianSpec& spec) {
    std::vector<double> p;
    double total = 0.0;
    for (double x : qgaussian_grid(spec)) {
        p.push_back(q_exponential(-spec.beta * x * x, spec.q));
        total += p.back();
    }
    if (!(total > 0.0)) throw InvalidArgument("q-exponential vanishes on the whole grid");
    for (double& v : p) v /= total;
    return p;
}

DataVector discretize_qgaussian(const QGaussianSpec& spec) {
    std::vector<double> amps;
    for (double p : qgaussian_probabilities(spec)) amps.push_back(std::sqrt(p));
    return DataVector::real(amps);
}

}  // namespace hwenc
