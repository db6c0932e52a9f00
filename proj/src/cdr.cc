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

#include "hwenc/cdr.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "hwenc/error.h"

namespace hwenc {

namespace {

constexpr double kQuarter = std::numbers::pi / 4;  // a quarter turn in the half-angle-free convention

Mat2 sequence_matrix(const std::vector<Gate>& seq) {
    Mat2 m{Complex(1), Complex(0), Complex(0), Complex(1)};
    for (const Gate& g : seq) m = mat_mul(g.block(), m);
    return m;
}

// Matrix with its global phase fixed, rounded so equal Cliffords compare equal.
std::vector<long> phase_key(const Mat2& m) {
    std::size_t lead = 0;
    while (std::abs(m[lead]) < 1e-9) ++lead;
    const Complex fix = std::abs(m[lead]) / m[lead];
    std::vector<long> key;
    for (const Complex& z : m) {
        const Complex w = z * fix;
        key.push_back(std::lround(w.real() * 1e6));
        key.push_back(std::lround(w.imag() * 1e6));
    }
    return key;
}

std::vector<std::vector<Gate>> build_cliffords() {
    std::vector<std::vector<Gate>> candidates;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                std::vector<Gate> seq;
                if (c) seq.push_back(Gate::rz(1, c * kQuarter));
                if (b) seq.push_back(Gate::ry(1, b * kQuarter));
                if (a) seq.push_back(Gate::rz(1, a * kQuarter));
                candidates.push_back(std::move(seq));
            }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<std::vector<Gate>> out;
    std::vector<std::vector<long>> seen;
    for (auto& seq : candidates) {
        auto key = phase_key(sequence_matrix(seq));
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        out.push_back(std::move(seq));
    }
    if (out.size() != 24) throw Error("single-qubit Clifford enumeration found " + std::to_string(out.size()));
    return out;
}

Counts multinomial(const std::vector<std::pair<BitString, double>>& probs, long shots, std::mt19937_64& rng) {
    Counts out;
    long left = shots;
    double mass = 0.0;
    for (const auto& kv : probs) mass += kv.second;
    for (std::size_t i = 0; i < probs.size() && left > 0; ++i) {
        long k = left;
        if (i + 1 < probs.size() && mass > 0.0) {
            k = std::binomial_distribution<long>(left, std::clamp(probs[i].second / mass, 0.0, 1.0))(rng);
        }
        mass -= probs[i].second;
        if (k > 0) out[probs[i].first] = k;
        left -= k;
    }
    return out;
}

}  // namespace

const std::vector<std::vector<Gate>>& clifford_sequences() {
    static const std::vector<std::vector<Gate>> table = build_cliffords();
    return table;
}

std::vector<std::size_t> rotation_positions(const Circuit& c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const GateKind k = c.gates[i].kind;
        if (k == GateKind::kRy || k == GateKind::kRz || k == GateKind::kRw) out.push_back(i);
    }
    return out;
}

std::vector<Circuit> near_clifford_ensemble(const Circuit& c, const CdrConfig& config) {
    if (c.level != Level::kCnot) throw InvalidArgument("near-Clifford copies need a CNOT-level circuit");
    if (config.circuits_per_rate < 1) throw InvalidArgument("circuits_per_rate must be at least 1");
    for (double r : config.replacement_rates)
        if (!(r > 0.0 && r <= 1.0)) throw InvalidArgument("replacement rates must lie in (0, 1]");
    const std::vector<std::size_t> rotations = rotation_positions(c);
    const auto& cliffords = clifford_sequences();
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> pick(0, cliffords.size() - 1);
    std::vector<Circuit> out;
    for (double r : config.replacement_rates) {
        const double want = std::ceil(r * static_cast<double>(rotations.size()) - 1e-9);
        const std::size_t count = std::min(rotations.size(), static_cast<std::size_t>(std::max(want, rotations.empty() ? 0.0 : 1.0)));
        for (int draw = 0; draw < config.circuits_per_rate; ++draw) {
            std::vector<std::size_t> chosen = rotations;
            std::shuffle(chosen.begin(), chosen.end(), rng);
            chosen.resize(count);
            std::sort(chosen.begin(), chosen.end());
            Circuit copy;
            copy.n = c.n;
            copy.level = Level::kCnot;
            std::size_t next = 0;
            for (std::size_t i = 0; i < c.gates.size(); ++i) {
                if (next < chosen.size() && chosen[next] == i) {
                    const int wire = c.gates[i].target();
                    for (Gate g : cliffords[pick(rng)]) {
                        g.outs = {wire};
                        copy.gates.push_back(g);
                    }
                    ++next;
                } else {
                    copy.gates.push_back(c.gates[i]);
                }
            }
            out.push_back(std::move(copy));
        }
    }
    return out;
}

std::vector<double> frequencies(const Counts& counts, const std::vector<BitString>& observables) {
    long total = 0;
    for (const auto& kv : counts) total += kv.second;
    std::vector<double> out;
    for (const BitString& b : observables) {
        auto it = counts.find(b);
        out.push_back(total > 0 && it != counts.end() ? static_cast<double>(it->second) / total : 0.0);
    }
    return out;
}

TrainingSet build_training_set(const std::vector<Circuit>& ensemble, const std::vector<BitString>& observables,
                               const NoiseModel& noise, long shots, std::uint64_t seed, unsigned threads) {
    std::vector<std::vector<double>> noisy(ensemble.size()), ideal(ensemble.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t j = next++; j < ensemble.size(); j = next++) {
            const SparseState s = run(ensemble[j]);
            for (const BitString& b : observables) ideal[j].push_back(std::norm(s.amplitude(b)));
            noisy[j] = frequencies(run_noisy(ensemble[j], noise, shots, derive_seed(seed, j)), observables);
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, ensemble.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    TrainingSet out;
    out.observables = observables;
    out.pairs.resize(observables.size());
    for (std::size_t o = 0; o < observables.size(); ++o)
        for (std::size_t j = 0; j < ensemble.size(); ++j) out.pairs[o].emplace_back(noisy[j][o], ideal[j][o]);
    return out;
}

RegressionFit fit_linear(const std::vector<std::pair<double, double>>& pairs) {
    RegressionFit f;
    if (pairs.size() < 2) {
        f.degenerate = true;
        return f;
    }
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pairs) {
        mx += x;
        my += y;
    }
    mx /= pairs.size();
    my /= pairs.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pairs) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx <= 1e-24 * pairs.size()) {
        f.degenerate = true;
        return f;
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

std::vector<double> apply_fits(const std::vector<RegressionFit>& fits, const std::vector<double>& raw) {
    if (fits.size() != raw.size()) throw InvalidArgument("one fit per observable expected");
    std::vector<double> out(raw.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = std::clamp(fits[i].slope * raw[i] + fits[i].intercept, 0.0, 1.0);
        sum += out[i];
    }
    if (sum > 0.0)
        for (double& v : out) v /= sum;
    return out;
}

Mitigation fit_and_mitigate(const TrainingSet& training, const std::vector<double>& raw) {
    Mitigation m;
    for (const auto& p : training.pairs) m.fits.push_back(fit_linear(p));
    m.mitigated = apply_fits(m.fits, raw);
    return m;
}

double percentile(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidArgument("percentile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = std::clamp(q, 0.0, 100.0) / 100.0 * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<Band> bootstrap_bands(const Counts& counts, const std::vector<BitString>& observables, int resamples,
                                  std::uint64_t seed,
                                  const std::function<std::vector<double>(const std::vector<double>&)>& transform) {
    if (resamples < 2) throw InvalidArgument("bootstrap needs at least 2 resamples");
    long shots = 0;
    std::vector<std::pair<BitString, double>> probs;
    for (const auto& [b, k] : counts) shots += k;
    if (shots <= 0) throw InvalidArgument("bootstrap needs at least one shot");
    for (const auto& [b, k] : counts) probs.emplace_back(b, static_cast<double>(k) / shots);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> samples(observables.size());
    for (int r = 0; r < resamples; ++r) {
        std::vector<double> f = frequencies(multinomial(probs, shots, rng), observables);
        if (transform) f = transform(f);
        for (std::size_t o = 0; o < observables.size(); ++o) samples[o].push_back(f[o]);
    }
    std::vector<Band> out;
    for (const auto& s : samples) out.push_back({percentile(s, 5.0), percentile(s, 95.0)});
    return out;
}

}  // namespace hwenc
