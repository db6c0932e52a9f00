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

#include "hwenc/encoders.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "hwenc/error.h"
#include "hwenc/simulator.h"

namespace hwenc {

namespace {

void check_width(int n) {
    if (n < 1 || n > kMaxQubits) throw InvalidArgument("qubit count " + std::to_string(n) + " out of range");
}

AngleSet angles_for(const DataVector& x) {
    return x.mode == Mode::kComplex ? angles_complex(x) : angles_real(x);
}

void append_x_layer(Circuit& c, const BitString& b) {
    for (int q : b.ones()) c.gates.push_back(Gate::x(q));
}

Gate mixing_gate(const QubitSet& ins, const QubitSet& outs, const AngleSet& a, std::size_t i, bool complex) {
    const double theta = a.thetas[i];
    if (ins.size() == 1 && outs.size() == 1) {
        return complex ? Gate::complex_rbs(*ins.begin(), *outs.begin(), theta, a.phis[i])
                       : Gate::rbs(*ins.begin(), *outs.begin(), theta);
    }
    return complex ? Gate::complex_grbs(ins, outs, theta, a.phis[i]) : Gate::grbs(ins, outs, theta);
}

// Puts e^{i phi} on |last> alone: controlled on its ones, acting on its lowest zero.
void append_final_phase(Circuit& c, const BitString& last, double phi) {
    QubitSet ones = last.ones();
    const QubitSet zeros = last.zeros();
    if (!zeros.empty()) {
        c.gates.push_back(Gate::anti_phase(*zeros.begin(), phi).controlled_by(ones));
        return;
    }
    const int t = *ones.begin();
    ones.erase(t);
    c.gates.push_back(Gate::x(t));
    c.gates.push_back(Gate::anti_phase(t, phi).controlled_by(ones));
    c.gates.push_back(Gate::x(t));
}

EncoderReport finish(Circuit c, std::vector<BitString> ordering, Mode mode) {
    EncoderReport r;
    r.param_count = c.parameter_count();
    r.circuit = std::move(c);
    r.ordering = std::move(ordering);
    r.mode = mode;
    return r;
}

EncoderReport dense(int n, int k, const DataVector& x, bool complex) {
    check_width(n);
    if (k < 0 || k > n) throw InvalidArgument("weight k=" + std::to_string(k) + " outside 0.." + std::to_string(n));
    x.validate();
    if (!complex && x.mode != Mode::kReal) throw InvalidArgument("real loader given complex data");
    const std::size_t d = x.size();
    if (d > binomial(n, k)) {
        throw InvalidArgument("d=" + std::to_string(d) + " exceeds binom(" + std::to_string(n) + "," +
                              std::to_string(k) + ")=" + std::to_string(binomial(n, k)));
    }
    const AngleSet a = complex ? angles_complex(x) : angles_real(x);
    const bool negate = 2 * k > n;
    const int kk = negate ? n - k : k;
    const EhrlichState start = EhrlichState::ones_marked(n, kk);
    const std::vector<BitString> seq = ehrlich_sequence(start, d);

    Circuit c;
    c.n = n;
    std::vector<BitString> ordering;
    for (const BitString& b : seq) ordering.push_back(negate ? b.complement() : b);
    append_x_layer(c, ordering.front());

    QubitSet untouched = seq.front().ones();
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const GateParams gp = gate_params(seq[i], seq[i + 1], untouched);
        untouched = gp.untouched;
        if (!negate) {
            c.gates.push_back(mixing_gate(gp.ins, gp.outs, a, i, complex).controlled_by(gp.ctrls));
        } else {
            // complemented picture: roles swap and shared ones become shared zeros
            c.gates.push_back(mixing_gate(gp.outs, gp.ins, a, i, complex).anti_controlled_by(gp.ctrls));
        }
    }
    if (complex) append_final_phase(c, ordering.back(), a.phis.back());
    return finish(std::move(c), std::move(ordering), complex ? Mode::kComplex : Mode::kReal);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<BitString> dense_ordering(int n, int k, std::size_t d) {
    check_width(n);
    const bool negate = 2 * k > n;
    std::vector<BitString> seq = ehrlich_sequence(EhrlichState::ones_marked(n, negate ? n - k : k), d);
    if (negate)
        for (BitString& b : seq) b = b.complement();
    return seq;
}

EncoderReport encode_dense_real(int n, int k, const DataVector& x) { return dense(n, k, x, false); }

EncoderReport encode_dense_complex(int n, int k, const DataVector& x) { return dense(n, k, x, true); }

EncoderReport encode_dense(int n, int k, const DataVector& x) { return dense(n, k, x, x.mode == Mode::kComplex); }

namespace {

void verify_sparse(const EncoderReport& r, const std::vector<Complex>& target, std::size_t first_mixing) {
    constexpr double kTol = 1e-9;
    const std::size_t s = r.ordering.size();
    SparseState state = SparseState::basis(r.circuit.n);
    for (std::size_t g = 0; g < first_mixing; ++g) apply_gate(state, r.circuit.gates[g]);
    double loaded = 0.0;
    for (std::size_t i = 0; i + 1 < s; ++i) {
        const std::size_t g = first_mixing + i;
        apply_gate(state, r.circuit.gates[g]);
        loaded += std::norm(target[i]);
        for (std::size_t j = 0; j <= i; ++j) {
            if (std::abs(state.amplitude(r.ordering[j]) - target[j]) > kTol) {
                throw VerificationError("gate " + std::to_string(g) + " disturbed the amplitude of address " +
                                            r.ordering[j].to_string(),
                                        static_cast<long>(g));
            }
        }
        const double carrier = std::abs(state.amplitude(r.ordering[i + 1]));
        if (std::abs(carrier - std::sqrt(std::max(0.0, 1.0 - loaded))) > kTol) {
            throw VerificationError("gate " + std::to_string(g) + " leaked weight away from address " +
                                        r.ordering[i + 1].to_string(),
                                    static_cast<long>(g));
        }
    }
    for (std::size_t g = first_mixing + (s - 1); g < r.circuit.gates.size(); ++g) apply_gate(state, r.circuit.gates[g]);
    // a single real entry keeps its sign only as a global phase
    const bool sign_free = s == 1 && r.mode == Mode::kReal;
    for (std::size_t j = 0; j < s; ++j) {
        const Complex got = state.amplitude(r.ordering[j]);
        const double err = sign_free ? std::abs(std::abs(got) - std::abs(target[j])) : std::abs(got - target[j]);
        if (err > kTol) {
            throw VerificationError("final state differs from the data at address " + r.ordering[j].to_string(), -1);
        }
    }
}

}  // namespace

EncoderReport encode_sparse(int n, const SparseTuple& y, const SparseOptions& options) {
    check_width(n);
    if (y.pairs.empty()) throw InvalidArgument("sparse tuple is empty");
    std::vector<SparseEntry> pairs = y.pairs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].address.size() != n) {
            throw InvalidArgument("address " + pairs[i].address.to_string() + " does not have length " + std::to_string(n));
        }
    }
    if (options.sort_by_weight) {
        std::stable_sort(pairs.begin(), pairs.end(), [](const SparseEntry& a, const SparseEntry& b) {
            return a.address.hamming_weight() < b.address.hamming_weight();
        });
    }
    std::vector<BitString> ordering;
    std::vector<Complex> values;
    for (const SparseEntry& e : pairs) {
        if (std::find(ordering.begin(), ordering.end(), e.address) != ordering.end())
            throw InvalidArgument("duplicate address " + e.address.to_string());
        ordering.push_back(e.address);
        values.push_back(e.value);
    }
    for (std::size_t i = 0; i + 1 < ordering.size(); ++i) {
        if (ordering[i + 1].hamming_weight() < ordering[i].hamming_weight()) {
            throw InvalidArgument("address weights must not decrease: entry " + std::to_string(i + 1) + " (" +
                                  ordering[i].to_string() + ") precedes entry " + std::to_string(i + 2) + " (" +
                                  ordering[i + 1].to_string() + ")");
        }
    }
    const bool complex = y.mode == Mode::kComplex;
    const DataVector x = complex ? DataVector::complex(values) : [&] {
        std::vector<double> re;
        for (const Complex& v : values) re.push_back(v.real());
        DataVector d = DataVector::real(re);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i].imag() != 0.0) throw InvalidArgument("real sparse tuple has a complex value");
        return d;
    }();
    x.validate();
    const AngleSet a = angles_for(x);

    Circuit c;
    c.n = n;
    append_x_layer(c, ordering.front());
    const std::size_t first_mixing = c.gates.size();
    QubitSet untouched = ordering.front().ones();
    for (std::size_t i = 0; i + 1 < ordering.size(); ++i) {
        const GateParams gp = gate_params(ordering[i], ordering[i + 1], untouched);
        untouched = gp.untouched;
        c.gates.push_back(mixing_gate(gp.ins, gp.outs, a, i, complex).controlled_by(gp.ctrls));
    }
    if (complex) append_final_phase(c, ordering.back(), a.phis.back());
    EncoderReport r = finish(std::move(c), std::move(ordering), y.mode);

    if (options.verify) {
        const double norm = x.norm();
        std::vector<Complex> target;
        for (const Complex& v : x.entries) target.push_back(v / norm);
        verify_sparse(r, target, first_mixing);
    }
    return r;
}

std::vector<BinaryStage> binary_stages(int n) {
    check_width(n);
    std::vector<BinaryStage> stages;
    BitString last(n, 0);
    for (int w = 1; w <= n; ++w) {
        bool found = false;
        for (const EhrlichState& cand : {EhrlichState::ones_marked(n, w), EhrlichState::zeros_marked(n, w)}) {
            const std::uint64_t extra = cand.bits.word() & ~last.word();
            if ((cand.bits.word() & last.word()) == last.word() && std::popcount(extra) == 1) {
                BinaryStage st{cand, std::countr_zero(extra) + 1, last.ones()};
                stages.push_back(st);
                found = true;
                break;
            }
        }
        if (!found) {
            throw Error("no weight-" + std::to_string(w) + " seed extends " + last.to_string() + " by one bit");
        }
        last = ehrlich_full_sequence(stages.back().seed).back();
    }
    return stages;
}

EncoderReport encode_binary(int n, const DataVector& x) {
    check_width(n);
    if (n > 30) throw InvalidArgument("binary loader limited to 30 qubits");
    x.validate();
    const std::size_t d = std::size_t{1} << n;
    if (x.size() != d) {
        throw InvalidArgument("binary loader needs 2^" + std::to_string(n) + "=" + std::to_string(d) +
                              " entries, got " + std::to_string(x.size()));
    }
    const bool complex = x.mode == Mode::kComplex;
    const AngleSet a = angles_for(x);
    Circuit c;
    c.n = n;
    std::vector<BitString> ordering{BitString(n, 0)};
    std::size_t idx = 0;
    for (const BinaryStage& st : binary_stages(n)) {
        const Gate bridge = complex ? Gate::rw(st.bridge_target, a.thetas[idx], a.phis[idx])
                                    : Gate::ry(st.bridge_target, a.thetas[idx]);
        c.gates.push_back(bridge.controlled_by(st.bridge_ctrls));
        ++idx;
        const std::vector<BitString> seq = ehrlich_full_sequence(st.seed);
        ordering.push_back(seq.front());
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            // the stage input is already superposed, so every control is kept
            const GateParams gp = gate_params(seq[i], seq[i + 1], {});
            c.gates.push_back(mixing_gate(gp.ins, gp.outs, a, idx, complex).controlled_by(gp.ctrls));
            ++idx;
            ordering.push_back(seq[i + 1]);
        }
    }
    if (complex) append_final_phase(c, ordering.back(), a.phis.back());
    return finish(std::move(c), std::move(ordering), x.mode);
}

}  // namespace hwenc
