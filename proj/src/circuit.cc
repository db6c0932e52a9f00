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

#include "hwenc/circuit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hwenc/error.h"

namespace hwenc {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kNames{{
    {GateKind::kX, "X"},
    {GateKind::kRy, "Ry"},
    {GateKind::kRz, "Rz"},
    {GateKind::kRw, "Rw"},
    {GateKind::kAntiPhase, "AntiPhase"},
    {GateKind::kRBS, "RBS"},
    {GateKind::kComplexRBS, "ComplexRBS"},
    {GateKind::kGRBS, "GRBS"},
    {GateKind::kCNOT, "CNOT"},
}};

Gate single(GateKind kind, int target, double theta, double phi) {
    Gate g;
    g.kind = kind;
    g.theta = theta;
    g.phi = phi;
    g.outs = {target};
    return g;
}

std::string where(std::size_t index) { return "gate " + std::to_string(index) + ": "; }

}  // namespace

std::string_view kind_name(GateKind kind) {
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

GateKind kind_from_name(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    throw ParseError("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::x(int target) { return single(GateKind::kX, target, 0.0, 0.0); }
Gate Gate::ry(int target, double theta) { return single(GateKind::kRy, target, theta, 0.0); }
Gate Gate::rz(int target, double phi) { return single(GateKind::kRz, target, 0.0, phi); }
Gate Gate::rw(int target, double theta, double phi) { return single(GateKind::kRw, target, theta, phi); }
Gate Gate::anti_phase(int target, double phi) { return single(GateKind::kAntiPhase, target, 0.0, phi); }

Gate Gate::rbs(int in, int out, double theta) {
    Gate g;
    g.kind = GateKind::kRBS;
    g.theta = theta;
    g.ins = {in};
    g.outs = {out};
    return g;
}

Gate Gate::complex_rbs(int in, int out, double theta, double phi) {
    Gate g = rbs(in, out, theta);
    g.kind = GateKind::kComplexRBS;
    g.phi = phi;
    return g;
}

Gate Gate::grbs(const QubitSet& ins, const QubitSet& outs, double theta) {
    Gate g;
    g.kind = GateKind::kGRBS;
    g.theta = theta;
    g.ins.assign(ins.begin(), ins.end());
    g.outs.assign(outs.begin(), outs.end());
    return g;
}

Gate Gate::complex_grbs(const QubitSet& ins, const QubitSet& outs, double theta, double phi) {
    Gate g = grbs(ins, outs, theta);
    g.phi = phi;
    g.phased = true;
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g = single(GateKind::kCNOT, target, 0.0, 0.0);
    g.ctrls = {control};
    return g;
}

Gate Gate::controlled_by(const QubitSet& c) const {
    Gate g = *this;
    g.ctrls.insert(c.begin(), c.end());
    return g;
}

Gate Gate::anti_controlled_by(const QubitSet& c) const {
    Gate g = *this;
    g.anti_ctrls.insert(c.begin(), c.end());
    return g;
}

bool Gate::is_mixing() const {
    return kind == GateKind::kRBS || kind == GateKind::kComplexRBS || kind == GateKind::kGRBS;
}

bool Gate::is_single_qubit() const { return !is_mixing() && kind != GateKind::kCNOT; }

int Gate::target() const {
    if (is_mixing()) throw InvalidArgument(std::string(kind_name(kind)) + " has no single target");
    return outs.at(0);
}

int Gate::control_count() const {
    const int own = kind == GateKind::kCNOT ? 1 : 0;
    return static_cast<int>(ctrls.size() + anti_ctrls.size()) - own;
}

int Gate::parameter_count() const {
    switch (kind) {
        case GateKind::kX:
        case GateKind::kCNOT:
            return 0;
        case GateKind::kRy:
        case GateKind::kRz:
        case GateKind::kAntiPhase:
        case GateKind::kRBS:
            return 1;
        case GateKind::kRw:
        case GateKind::kComplexRBS:
            return 2;
        case GateKind::kGRBS:
            return phased ? 2 : 1;
    }
    return 0;
}

Mat2 mat_ry(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {Complex(c), Complex(-s), Complex(s), Complex(c)};
}

Mat2 mat_rz(double phi) { return {std::polar(1.0, -phi), Complex(0), Complex(0), std::polar(1.0, phi)}; }

Mat2 mat_rw(double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex e = std::polar(1.0, phi);
    const Complex ec = std::conj(e);
    return {e * c, -e * s, ec * s, ec * c};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_adjoint(const Mat2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

Mat2 Gate::block() const {
    switch (kind) {
        case GateKind::kX:
        case GateKind::kCNOT:
            return {Complex(0), Complex(1), Complex(1), Complex(0)};
        case GateKind::kRy:
        case GateKind::kRBS:
            return mat_ry(theta);
        case GateKind::kRz:
            return mat_rz(phi);
        case GateKind::kAntiPhase:
            return {std::polar(1.0, phi), Complex(0), Complex(0), Complex(1)};
        case GateKind::kRw:
        case GateKind::kComplexRBS:
            return mat_rw(theta, phi);
        case GateKind::kGRBS:
            return phased ? mat_rw(theta, phi) : mat_ry(theta);
    }
    return {};
}

QubitSet Gate::wires() const {
    QubitSet w(ins.begin(), ins.end());
    w.insert(outs.begin(), outs.end());
    w.insert(ctrls.begin(), ctrls.end());
    w.insert(anti_ctrls.begin(), anti_ctrls.end());
    return w;
}

GateAction action_of(const Gate& g) {
    GateAction a;
    for (int q : g.ctrls) {
        a.control_mask |= 1ULL << (q - 1);
        a.control_value |= 1ULL << (q - 1);
    }
    for (int q : g.anti_ctrls) a.control_mask |= 1ULL << (q - 1);
    for (int q : g.ins) {
        a.flip_mask |= 1ULL << (q - 1);
        a.pattern0 |= 1ULL << (q - 1);
    }
    for (int q : g.outs) a.flip_mask |= 1ULL << (q - 1);
    a.m = g.block();
    return a;
}

void Circuit::validate() const {
    if (n < 1 || n > kMaxQubits) throw InvalidArgument("circuit width " + std::to_string(n) + " out of range");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        std::size_t refs = g.ins.size() + g.outs.size() + g.ctrls.size() + g.anti_ctrls.size();
        const QubitSet w = g.wires();
        if (w.size() != refs) throw InvalidArgument(where(i) + "qubit labels are not distinct");
        for (int q : w) {
            if (q < 1 || q > n) throw InvalidArgument(where(i) + "qubit label " + std::to_string(q) + " outside 1.." + std::to_string(n));
        }
        switch (g.kind) {
            case GateKind::kRBS:
            case GateKind::kComplexRBS:
                if (g.ins.size() != 1 || g.outs.size() != 1)
                    throw InvalidArgument(where(i) + std::string(kind_name(g.kind)) + " needs one input and one output");
                break;
            case GateKind::kGRBS:
                if (g.outs.empty()) throw InvalidArgument(where(i) + "GRBS needs at least one output");
                break;
            case GateKind::kCNOT:
                if (g.ctrls.empty() || g.outs.size() != 1 || !g.ins.empty())
                    throw InvalidArgument(where(i) + "CNOT needs a control and one target");
                break;
            default:
                if (g.outs.size() != 1 || !g.ins.empty())
                    throw InvalidArgument(where(i) + std::string(kind_name(g.kind)) + " acts on exactly one target");
        }
        if (level == Level::kCnot) {
            const bool allowed = g.kind == GateKind::kX || g.kind == GateKind::kRy || g.kind == GateKind::kRz ||
                                 g.kind == GateKind::kRw || g.kind == GateKind::kCNOT;
            if (!allowed) throw InvalidArgument(where(i) + std::string(kind_name(g.kind)) + " is not a CNOT-level gate");
            if (g.control_count() != 0 || !g.anti_ctrls.empty())
                throw InvalidArgument(where(i) + "CNOT-level gates carry no extra controls");
        }
    }
}

int Circuit::cnot_count() const {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::kCNOT; }));
}

int Circuit::parameter_count() const {
    int p = 0;
    for (const Gate& g : gates) p += g.parameter_count();
    return p;
}

}  // namespace hwenc
