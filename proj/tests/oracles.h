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

// Independent reference computations shared by the test suites. Nothing here calls
// into the library beyond its data types.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hwenc/bitstring.h"
#include "hwenc/circuit.h"
#include "hwenc/coordinates.h"

namespace oracle {

using Complex = std::complex<double>;

/// All n-bit words of weight k, ascending.
inline std::vector<std::uint64_t> words_of_weight(int n, int k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
        if (std::popcount(w) == k) out.push_back(w);
    return out;
}

/// Pascal's triangle; exact up to n = 63.
inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = m; j > 0; --j) row[j] += row[j - 1];
    return row[k];
}

/// A one-entry real vector can only be loaded up to its sign.
inline std::vector<Complex> sign_free(std::vector<Complex> x) {
    if (x.size() == 1 && x[0].imag() == 0.0) x[0] = std::abs(x[0]);
    return x;
}

/// Forward hyperspherical product: x_i = norm * prod_{j<i} sin(t_j) * cos(t_i) (last
/// entry without the cosine), times e^{i psi_i} where psi_i is the running phase.
inline std::vector<Complex> hyperspherical(const std::vector<double>& thetas, const std::vector<double>& phis,
                                           double norm) {
    const std::size_t d = thetas.size() + 1;
    std::vector<Complex> out(d);
    double tail = norm;
    for (std::size_t i = 0; i < d; ++i) {
        const double mag = i + 1 < d ? tail * std::cos(thetas[i]) : tail;
        double phase = 0.0;
        if (!phis.empty()) {
            phase = phis[i];
            for (std::size_t j = 0; j < i; ++j) phase -= phis[j];
        }
        out[i] = mag * std::exp(Complex(0.0, phase));
        if (i + 1 < d) tail *= std::sin(thetas[i]);
    }
    return out;
}

/// Plain dense state-vector simulation, written independently of the library's
/// simulator: every gate is applied through its 2x2 block on the pair it mixes.
inline void apply(std::vector<Complex>& v, const std::vector<hwenc::Gate>& gates) {
    const std::uint64_t dim = v.size();
    for (const hwenc::Gate& g : gates) {
        std::uint64_t cmask = 0, cval = 0;
        for (int q : g.ctrls) cmask |= 1ULL << (q - 1), cval |= 1ULL << (q - 1);
        for (int q : g.anti_ctrls) cmask |= 1ULL << (q - 1);
        std::uint64_t lo = 0, hi = 0;  // the two patterns on the mixed wires
        std::uint64_t flip = 0;
        hwenc::Mat2 m = g.block();
        if (g.kind == hwenc::GateKind::kCNOT) {
            const int ctl = *g.ctrls.begin();
            cmask = 1ULL << (ctl - 1);
            cval = cmask;
            flip = 1ULL << (g.target() - 1);
            lo = 0;
            hi = flip;
            m = {Complex(0), Complex(1), Complex(1), Complex(0)};
        } else if (g.is_mixing()) {
            for (int q : g.ins) lo |= 1ULL << (q - 1);
            for (int q : g.outs) hi |= 1ULL << (q - 1);
            flip = lo | hi;
        } else {
            flip = 1ULL << (g.target() - 1);
            lo = 0;
            hi = flip;
        }
        for (std::uint64_t w = 0; w < dim; ++w) {
            if ((w & cmask) != cval || (w & flip) != lo) continue;
            const std::uint64_t w2 = (w & ~flip) | hi;
            const Complex a = v[w], b = v[w2];
            v[w] = m[0] * a + m[1] * b;
            v[w2] = m[2] * a + m[3] * b;
        }
    }
}

inline std::vector<Complex> simulate(const hwenc::Circuit& c) {
    std::vector<Complex> v(std::size_t{1} << c.n, 0.0);
    v[0] = 1.0;
    apply(v, c.gates);
    return v;
}

/// Column-major dense matrix of a gate list on n qubits.
inline std::vector<std::vector<Complex>> matrix(const std::vector<hwenc::Gate>& gates, int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::vector<Complex>> cols(dim);
    for (std::size_t w = 0; w < dim; ++w) {
        cols[w].assign(dim, 0.0);
        cols[w][w] = 1.0;
        apply(cols[w], gates);
    }
    return cols;
}

/// max |a - e^{i alpha} b| with alpha fitted on the largest entry of b.
inline double phase_deviation(const std::vector<std::vector<Complex>>& a, const std::vector<std::vector<Complex>>& b) {
    std::size_t bc = 0, br = 0;
    for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t r = 0; r < b[c].size(); ++r)
            if (std::abs(b[c][r]) > std::abs(b[bc][br])) bc = c, br = r;
    Complex ph = a[bc][br] / b[bc][br];
    if (std::abs(ph) < 1e-6) return std::abs(b[bc][br]);
    ph /= std::abs(ph);
    double d = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t r = 0; r < a[c].size(); ++r) d = std::max(d, std::abs(a[c][r] - ph * b[c][r]));
    return d;
}

inline std::vector<double> random_real(std::mt19937_64& rng, std::size_t d) {
    std::normal_distribution<double> g;
    std::vector<double> x(d);
    for (double& v : x) v = g(rng);
    return x;
}

inline std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t d) {
    std::normal_distribution<double> g;
    std::vector<Complex> x(d);
    for (Complex& v : x) v = Complex(g(rng), g(rng));
    return x;
}

inline double norm(const std::vector<Complex>& x) {
    double s = 0.0;
    for (const Complex& v : x) s += std::norm(v);
    return std::sqrt(s);
}

/// Largest |state[ordering[i]] - x_i / |x||, plus the total mass off the ordering.
inline double load_error(const std::vector<Complex>& state, const std::vector<hwenc::BitString>& ordering,
                         const std::vector<Complex>& x) {
    const double nx = norm(x);
    double err = 0.0;
    std::vector<bool> used(state.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i) {
        err = std::max(err, std::abs(state[ordering[i].word()] - x[i] / nx));
        used[ordering[i].word()] = true;
    }
    for (std::size_t w = 0; w < state.size(); ++w)
        if (!used[w]) err = std::max(err, std::abs(state[w]));
    return err;
}

// Random gate of any kind on at most `n` wires with random controls and anti-controls.
inline hwenc::Gate random_gate(std::mt19937_64& rng, int n) {
    std::vector<int> wires(n);
    for (int i = 0; i < n; ++i) wires[i] = i + 1;
    std::shuffle(wires.begin(), wires.end(), rng);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::size_t used = 0;
    auto take = [&](std::size_t k) {
        hwenc::QubitSet s;
        for (std::size_t i = 0; i < k && used < wires.size(); ++i) s.insert(wires[used++]);
        return s;
    };
    using hwenc::Gate;
    Gate g;
    const int kind = static_cast<int>(rng() % 9);
    switch (kind) {
        case 0: g = Gate::x(*take(1).begin()); break;
        case 1: g = Gate::ry(*take(1).begin(), ang(rng)); break;
        case 2: g = Gate::rz(*take(1).begin(), ang(rng)); break;
        case 3: g = Gate::rw(*take(1).begin(), ang(rng), ang(rng)); break;
        case 4: g = Gate::anti_phase(*take(1).begin(), ang(rng)); break;
        case 5: {
            const int a = *take(1).begin(), b = *take(1).begin();
            g = Gate::rbs(a, b, ang(rng));
            break;
        }
        case 6: {
            const int a = *take(1).begin(), b = *take(1).begin();
            g = Gate::complex_rbs(a, b, ang(rng), ang(rng));
            break;
        }
        default: {
            const std::size_t m = rng() % std::min<std::size_t>(3, wires.size()), m2 = 1 + rng() % 2;
            const hwenc::QubitSet ins = take(m), outs = take(m2);
            g = kind == 7 ? Gate::grbs(ins, outs, ang(rng)) : Gate::complex_grbs(ins, outs, ang(rng), ang(rng));
        }
    }
    const std::size_t free = wires.size() - used;
    const hwenc::QubitSet c = take(free ? rng() % (free + 1) : 0);
    const std::size_t left = wires.size() - used;
    const hwenc::QubitSet ac = take(left ? rng() % (left + 1) : 0);
    return g.controlled_by(c).anti_controlled_by(ac);
}

}  // namespace oracle
