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

#include "hwenc/coordinates.h"

#include <cmath>
#include <numbers>
#include <string>

#include "hwenc/error.h"

namespace hwenc {

DataVector DataVector::real(const std::vector<double>& values) {
    DataVector v;
    v.mode = Mode::kReal;
    v.entries.reserve(values.size());
    for (double x : values) v.entries.emplace_back(x, 0.0);
    return v;
}

DataVector DataVector::complex(std::vector<Complex> values) {
    DataVector v;
    v.mode = Mode::kComplex;
    v.entries = std::move(values);
    return v;
}

double DataVector::norm() const {
    double s = 0.0;
    for (const Complex& z : entries) s += std::norm(z);
    return std::sqrt(s);
}

void DataVector::validate() const {
    if (entries.empty()) throw InvalidArgument("data vector is empty");
    bool any = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Complex& z = entries[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("data entry " + std::to_string(i + 1) + " is not finite");
        }
        if (mode == Mode::kReal && z.imag() != 0.0) {
            throw InvalidArgument("real-mode data entry " + std::to_string(i + 1) + " has an imaginary part");
        }
        any = any || z != Complex(0.0, 0.0);
    }
    if (!any) throw InvalidArgument("zero vector cannot be normalized");
}

double safe_atan2(double y, double x) {
    if (y == 0.0 && x == 0.0) return 0.0;
    if (y == 0.0) y = 0.0;  // drop the sign of -0.0
    return std::atan2(y, x);
}

namespace {

std::vector<double> polar_angles(const std::vector<double>& a) {
    const std::size_t d = a.size();
    std::vector<double> thetas;
    if (d < 2) return thetas;
    thetas.resize(d - 1);
    // tail[i] = ||a[i..d-1]||, accumulated with hypot to stay accurate
    std::vector<double> tail(d + 1, 0.0);
    for (std::size_t i = d; i-- > 0;) tail[i] = std::hypot(tail[i + 1], a[i]);
    for (std::size_t i = 0; i + 2 < d; ++i) thetas[i] = safe_atan2(tail[i + 1], a[i]);
    thetas[d - 2] = safe_atan2(a[d - 1], a[d - 2]);
    return thetas;
}

double phase_of(const Complex& z) { return z == Complex(0.0, 0.0) ? 0.0 : std::arg(z); }

// Reduces to (-pi, pi]; the running sums double every step otherwise.
double wrap_phase(double a) {
    a = std::remainder(a, 2 * std::numbers::pi);
    return a <= -std::numbers::pi ? a + 2 * std::numbers::pi : a;
}

}  // namespace

AngleSet angles_real(const DataVector& x) {
    x.validate();
    if (x.mode != Mode::kReal) throw InvalidArgument("angles_real needs a real-mode vector");
    std::vector<double> a;
    a.reserve(x.size());
    for (const Complex& z : x.entries) a.push_back(z.real());
    return AngleSet{polar_angles(a), {}};
}

AngleSet angles_complex(const DataVector& x) {
    x.validate();
    std::vector<double> mags;
    mags.reserve(x.size());
    for (const Complex& z : x.entries) mags.push_back(std::abs(z));
    AngleSet out{polar_angles(mags), {}};
    out.phis.resize(x.size());
    double running = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.phis[i] = wrap_phase(phase_of(x.entries[i]) + running);
        running = wrap_phase(running + out.phis[i]);
    }
    return out;
}

DataVector reconstruct(const AngleSet& angles, double norm) {
    if (!(norm > 0.0)) throw InvalidArgument("norm must be positive");
    const std::size_t d = angles.thetas.size() + 1;
    const bool phased = !angles.phis.empty();
    if (phased && angles.phis.size() != d) {
        throw InvalidArgument("expected " + std::to_string(d) + " phases, got " + std::to_string(angles.phis.size()));
    }
    std::vector<Complex> out(d);
    double carry = norm;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        out[i] = carry * std::cos(angles.thetas[i]);
        carry *= std::sin(angles.thetas[i]);
    }
    out[d - 1] = carry;
    if (!phased) {
        std::vector<double> re;
        re.reserve(d);
        for (const Complex& z : out) re.push_back(z.real());
        return DataVector::real(re);
    }
    double running = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        out[i] *= std::polar(1.0, wrap_phase(angles.phis[i] - running));
        running = wrap_phase(running + angles.phis[i]);
    }
    return DataVector::complex(std::move(out));
}

}  // namespace hwenc
