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

#include "hwenc/simulator.h"

#include <algorithm>
#include <random>
#include <string>

#include "hwenc/error.h"

namespace hwenc {

SparseState SparseState::basis(int n, std::uint64_t word) {
    SparseState s;
    s.n = n;
    s.amps[word] = 1.0;
    return s;
}

Complex SparseState::amplitude(std::uint64_t word) const {
    auto it = amps.find(word);
    return it == amps.end() ? Complex(0.0) : it->second;
}

double SparseState::norm_squared() const {
    double s = 0.0;
    for (const auto& [w, a] : amps) s += std::norm(a);
    return s;
}

std::vector<std::uint64_t> SparseState::support() const {
    std::vector<std::uint64_t> out;
    out.reserve(amps.size());
    for (const auto& [w, a] : amps) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

void apply_gate(SparseState& state, const Gate& g) {
    const GateAction a = action_of(g);
    const std::uint64_t pattern1 = a.pattern0 ^ a.flip_mask;
    std::unordered_map<std::uint64_t, Complex> next;
    next.reserve(state.amps.size() * 2);
    for (const auto& [w, amp] : state.amps) {
        const std::uint64_t sel = w & a.flip_mask;
        if ((w & a.control_mask) != a.control_value || (sel != a.pattern0 && sel != pattern1)) {
            next[w] += amp;
            continue;
        }
        const std::uint64_t w0 = (w & ~a.flip_mask) | a.pattern0;
        const std::uint64_t w1 = w0 ^ a.flip_mask;
        const int col = sel == a.pattern0 ? 0 : 1;
        next[w0] += a.m[col] * amp;
        next[w1] += a.m[2 + col] * amp;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == Complex(0.0); });
    state.amps = std::move(next);
}

void apply_action(std::vector<Complex>& dense, const GateAction& a) {
    const std::uint64_t dim = dense.size();
    for (std::uint64_t w = 0; w < dim; ++w) {
        if ((w & a.control_mask) != a.control_value || (w & a.flip_mask) != a.pattern0) continue;
        const std::uint64_t w1 = w ^ a.flip_mask;
        const Complex x0 = dense[w], x1 = dense[w1];
        dense[w] = a.m[0] * x0 + a.m[1] * x1;
        dense[w1] = a.m[2] * x0 + a.m[3] * x1;
    }
}

SparseState run(const Circuit& c) { return run(c, SparseState::basis(c.n)); }

SparseState run(const Circuit& c, const SparseState& initial) {
    c.validate();
    if (initial.n != c.n) throw InvalidArgument("initial state width differs from circuit width");
    SparseState s = initial;
    for (const Gate& g : c.gates) apply_gate(s, g);
    return s;
}

std::vector<Complex> run_dense(const Circuit& c) {
    c.validate();
    if (c.n > 30) throw InvalidArgument("dense simulation limited to 30 qubits");
    std::vector<Complex> v(std::size_t{1} << c.n, Complex(0.0));
    v[0] = 1.0;
    for (const Gate& g : c.gates) apply_action(v, action_of(g));
    return v;
}

std::map<BitString, double> probabilities(const SparseState& state) {
    std::map<BitString, double> out;
    for (const auto& [w, a] : state.amps) out[BitString(state.n, w)] = std::norm(a);
    return out;
}

std::map<BitString, long> sample(const SparseState& state, long shots, std::uint64_t seed) {
    if (shots < 1) throw InvalidArgument("shots must be at least 1");
    const std::vector<std::uint64_t> keys = state.support();
    std::vector<double> p;
    double total = 0.0;
    for (std::uint64_t w : keys) {
        p.push_back(std::norm(state.amplitude(w)));
        total += p.back();
    }
    std::mt19937_64 rng(seed);
    std::map<BitString, long> counts;
    long left = shots;
    double mass = total;
    for (std::size_t i = 0; i < keys.size() && left > 0; ++i) {
        long k = left;
        if (i + 1 < keys.size() && mass > 0.0) {
            const double q = std::clamp(p[i] / mass, 0.0, 1.0);
            k = std::binomial_distribution<long>(left, q)(rng);
        }
        mass -= p[i];
        if (k > 0) counts[BitString(state.n, keys[i])] = k;
        left -= k;
    }
    return counts;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace hwenc
