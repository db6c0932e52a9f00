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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "hwenc/error.h"
#include "hwenc/simulator.h"

namespace hwenc {

namespace {

using Pattern = std::vector<std::pair<int, int>>;  // (cnot ordinal, pauli index 1..15)

constexpr std::size_t kSnapshotBudget = std::size_t{1} << 24;  // amplitudes
constexpr std::size_t kCacheBudget = std::size_t{1} << 23;     // doubles

// Pauli code: 0 = I, 1 = X, 2 = Y, 3 = Z.
void apply_pauli(std::vector<Complex>& v, int label, int code) {
    if (code == 0) return;
    const std::uint64_t bit = 1ULL << (label - 1);
    for (std::uint64_t w = 0; w < v.size(); ++w) {
        if (w & bit) continue;
        Complex& a0 = v[w];
        Complex& a1 = v[w | bit];
        switch (code) {
            case 1:
                std::swap(a0, a1);
                break;
            case 2: {
                const Complex t = a0;
                a0 = Complex(0, -1) * a1;
                a1 = Complex(0, 1) * t;
                break;
            }
            case 3:
                a1 = -a1;
                break;
        }
    }
}

}  // namespace

NoiseModel parse_noise(const std::string& spec) {
    NoiseModel m;
    if (spec.empty() || spec == "none") return m;
    const std::string prefix = "depol:";
    if (spec.rfind(prefix, 0) != 0) throw InvalidArgument("noise spec must look like depol:P, got '" + spec + "'");
    const std::string value = spec.substr(prefix.size());
    try {
        std::size_t used = 0;
        m.p2 = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
        throw InvalidArgument("bad depolarizing probability '" + value + "'");
    }
    if (!(m.p2 >= 0.0 && m.p2 < 1.0)) throw InvalidArgument("depolarizing probability must lie in [0, 1)");
    return m;
}

std::map<BitString, long> run_noisy(const Circuit& c, const NoiseModel& noise, long shots,
                                    std::optional<std::uint64_t> seed) {
    if (c.level != Level::kCnot) throw InvalidArgument("noisy simulation needs a CNOT-level circuit");
    c.validate();
    if (shots < 1) throw InvalidArgument("shots must be at least 1");
    if (!(noise.p2 >= 0.0 && noise.p2 < 1.0)) throw InvalidArgument("depolarizing probability must lie in [0, 1)");
    if (c.n > 24) throw InvalidArgument("noisy simulation limited to 24 qubits");

    std::vector<GateAction> actions;
    std::vector<std::size_t> cnot_at;  // gate index of each CNOT
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        actions.push_back(action_of(c.gates[i]));
        if (c.gates[i].kind == GateKind::kCNOT) cnot_at.push_back(i);
    }
    const std::size_t dim = std::size_t{1} << c.n;
    const int num_cnots = static_cast<int>(cnot_at.size());

    // ideal states right after each CNOT, for resuming at the first error
    std::vector<std::vector<Complex>> snapshots;
    std::vector<Complex> ideal(dim, Complex(0.0));
    ideal[0] = 1.0;
    const bool snap = dim * cnot_at.size() <= kSnapshotBudget;
    {
        std::size_t next_cnot = 0;
        for (std::size_t i = 0; i < actions.size(); ++i) {
            apply_action(ideal, actions[i]);
            if (snap && next_cnot < cnot_at.size() && cnot_at[next_cnot] == i) {
                snapshots.push_back(ideal);
                ++next_cnot;
            }
        }
    }

    auto cumulative = [](const std::vector<Complex>& v) {
        std::vector<double> cdf(v.size());
        double acc = 0.0;
        for (std::size_t w = 0; w < v.size(); ++w) cdf[w] = acc += std::norm(v[w]);
        return cdf;
    };
    const std::vector<double> ideal_cdf = cumulative(ideal);

    auto simulate = [&](const Pattern& pattern) {
        const std::size_t start = cnot_at[pattern.front().first];
        std::vector<Complex> v;
        if (snap) {
            v = snapshots[pattern.front().first];
        } else {
            v.assign(dim, Complex(0.0));
            v[0] = 1.0;
            for (std::size_t i = 0; i <= start; ++i) apply_action(v, actions[i]);
        }
        std::size_t k = 0;
        for (std::size_t i = start; i < actions.size(); ++i) {
            if (i != start) apply_action(v, actions[i]);
            while (k < pattern.size() && cnot_at[pattern[k].first] == i) {
                const Gate& g = c.gates[i];
                apply_pauli(v, *g.ctrls.begin(), pattern[k].second / 4);
                apply_pauli(v, g.target(), pattern[k].second % 4);
                ++k;
            }
        }
        return cumulative(v);
    };

    std::mt19937_64 rng(seed.value_or(noise.seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pauli(1, 15);
    std::map<Pattern, std::vector<double>> cache;
    std::size_t cached_doubles = 0;
    std::vector<long> tally(dim, 0);

    for (long s = 0; s < shots; ++s) {
        Pattern pattern;
        if (noise.p2 > 0.0) {
            std::geometric_distribution<long> gap(noise.p2);
            long pos = -1;
            while (true) {
                pos += 1 + gap(rng);
                if (pos >= num_cnots) break;
                pattern.emplace_back(static_cast<int>(pos), pauli(rng));
            }
        }
        const std::vector<double>* cdf = &ideal_cdf;
        std::vector<double> fresh;
        if (!pattern.empty()) {
            auto it = cache.find(pattern);
            if (it != cache.end()) {
                cdf = &it->second;
            } else if (cached_doubles + dim <= kCacheBudget) {
                cdf = &cache.emplace(pattern, simulate(pattern)).first->second;
                cached_doubles += dim;
            } else {
                fresh = simulate(pattern);
                cdf = &fresh;
            }
        }
        const double u = unit(rng) * cdf->back();
        std::size_t w = static_cast<std::size_t>(std::upper_bound(cdf->begin(), cdf->end(), u) - cdf->begin());
        if (w >= dim) w = dim - 1;
        ++tally[w];
    }

    std::map<BitString, long> counts;
    for (std::size_t w = 0; w < dim; ++w)
        if (tally[w] > 0) counts[BitString(c.n, w)] = tally[w];
    return counts;
}

}  // namespace hwenc
