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
#include <vector>

namespace hwenc {

using Complex = std::complex<double>;

enum class Mode { kReal, kComplex };

/// Data vector to be loaded; in real mode every imaginary part is zero.
struct DataVector {
    std::vector<Complex> entries;
    Mode mode = Mode::kReal;

    static DataVector real(const std::vector<double>& values);
    static DataVector complex(std::vector<Complex> values);

    std::size_t size() const { return entries.size(); }
    double norm() const;
    /// Throws InvalidArgument on an empty or all-zero vector, or on a real vector
    /// carrying imaginary parts.
    void validate() const;
};

/// Hyperspherical angles: d-1 polar angles, plus d phases in complex mode.
struct AngleSet {
    std::vector<double> thetas;
    std::vector<double> phis;
};

/// atan2 with the two conventions the loaders rely on: atan2(0, 0) = 0 and the
/// result always lies in (-pi, pi] (a signed zero in `y` never yields -pi).
double safe_atan2(double y, double x);

AngleSet angles_real(const DataVector& x);
/// Phases follow phi_i = arg(x_i) + sum_{j<i} phi_j, each reduced into (-pi, pi].
AngleSet angles_complex(const DataVector& x);

/// Evaluates the sine/cosine cascade (and, when phases are present, the phase
/// telescoping) to rebuild the vector with the given norm.
DataVector reconstruct(const AngleSet& angles, double norm);

}  // namespace hwenc
