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

#include <vector>

#include "hwenc/coordinates.h"

namespace hwenc {

struct QGaussianSpec {
    double q = 1.5;
    double beta = 2.0;
    double lo = -2.0;
    double hi = 2.0;
    int points = 15;

    void validate() const;
};

/// e^x for q = 1, [1 + (1-q) x]^(1/(1-q)) where the bracket is positive, else 0.
double q_exponential(double x, double q);

/// Uniform grid over [lo, hi] including both ends.
std::vector<double> qgaussian_grid(const QGaussianSpec& spec);

/// Normalized probabilities e_q(-beta x^2) / sum on the grid.
std::vector<double> qgaussian_probabilities(const QGaussianSpec& spec);

/// Real data vector whose squared entries are the grid probabilities.
DataVector discretize_qgaussian(const QGaussianSpec& spec);

}  // namespace hwenc
