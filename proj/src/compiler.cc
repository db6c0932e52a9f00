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

#include "hwenc/compiler.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "hwenc/error.h"

namespace hwenc {

namespace {

constexpr double kEps = 1e-13;
constexpr double kPi = std::numbers::pi;

void append(std::vector<Gate>& out, const std::vector<Gate>& more) { out.insert(out.end(), more.begin(), more.end()); }

std::vector<Gate> x_layer(const QubitSet& wires) {
    std::vector<Gate> out;
    for (int q : wires) out.push_back(Gate::x(q));
    return out;
}

std::vector<Gate> conjugate_by_x(const QubitSet& wires, const std::vector<Gate>& core) {
    std::vector<Gate> out = x_layer(wires);
    append(out, core);
    append(out, x_layer(wires));
    return out;
}

Gate rotation(GateKind axis, int target, double angle) {
    return axis == GateKind::kRy ? Gate::ry(target, angle) : Gate::rz(target, angle);
}

double wrap_angle(double a) {
    a = std::remainder(a, 2 * kPi);
    return a <= -kPi ? a + 2 * kPi : a;
}

// SU(2) matrix on `target` conditioned on every control being 1.
std::vector<Gate> controlled_su2(const Mat2& w, int target, const QubitSet& ctrls) {
    const double sin_part = std::sqrt(std::norm(w[1]) + w[0].imag() * w[0].imag());
    if (sin_part < kEps) {
        if (w[0].real() > 0) return {};
        return compile_mcrot(GateKind::kRy, target, -kPi, ctrls);  // -I, any axis works
    }
    if (std::abs(w[1]) < kEps) return compile_mcrot(GateKind::kRz, target, -std::arg(w[0]), ctrls);
    if (std::abs(w[0].imag()) < kEps && std::abs(w[1].imag()) < kEps) {
        return compile_mcrot(GateKind::kRy, target, std::atan2(w[2].real(), w[0].real()), ctrls);
    }
    // w = cos(l) I + i sin(l) (n . sigma); rotate n onto z and back
    const double lambda = std::atan2(sin_part, w[0].real());
    const double wz = w[0].imag() / sin_part;
    const double wx = (w[1] + w[2]).imag() / (2 * sin_part);
    const double wy = (w[1] - w[2]).real() / (2 * sin_part);
    const double beta = std::acos(std::clamp(wz, -1.0, 1.0));
    const double alpha = std::atan2(wy, wx);
    std::vector<Gate> out{Gate::rz(target, -alpha / 2), Gate::ry(target, -beta / 2)};
    append(out, compile_mcrot(GateKind::kRz, target, -lambda, ctrls));
    out.push_back(Gate::rw(target, beta / 2, -alpha / 2));
    return out;
}

// e^{i gamma} on the all-ones pattern of `ctrls`.
std::vector<Gate> controlled_phase(double gamma, const QubitSet& ctrls) {
    gamma = wrap_angle(gamma);
    if (ctrls.empty() || std::abs(gamma) < kEps) return {};
    QubitSet rest = ctrls;
    const int c = *rest.rbegin();
    rest.erase(c);
    return compile_controlled_u2({Complex(1.0), Complex(0.0), Complex(0.0), std::polar(1.0, gamma)}, c, rest);
}

std::vector<Gate> top_template(int a, int o, double theta, double phi, bool phased, const QubitSet& ctrls) {
    std::vector<Gate> out{Gate::ry(o, kPi / 4), Gate::cnot(o, a)};
    append(out, compile_mcrot(GateKind::kRy, a, theta / 2, ctrls));
    append(out, compile_mcrot(GateKind::kRy, o, theta / 2, ctrls));
    out.push_back(Gate::cnot(o, a));
    out.push_back(Gate::ry(o, -kPi / 4));
    if (phased) {
        append(out, compile_mcrot(GateKind::kRz, a, phi / 2, ctrls));
        append(out, compile_mcrot(GateKind::kRz, o, -phi / 2, ctrls));
    }
    return out;
}

bool is_phased(const Gate& g) {
    return g.kind == GateKind::kComplexRBS || (g.kind == GateKind::kGRBS && g.phased);
}

std::vector<Gate> mixing(const Gate& g, std::optional<Template> choice) {
    if (!g.is_mixing()) throw InvalidArgument(std::string(kind_name(g.kind)) + " is not a mixing gate");
    if (g.outs.empty()) throw InvalidArgument("mixing gate needs at least one output");
    if (!g.anti_ctrls.empty()) {
        Gate inner = g;
        inner.ctrls.insert(g.anti_ctrls.begin(), g.anti_ctrls.end());
        inner.anti_ctrls.clear();
        return conjugate_by_x(g.anti_ctrls, mixing(inner, choice));
    }
    const bool phased = is_phased(g);
    const QubitSet ins(g.ins.begin(), g.ins.end());
    const QubitSet outs(g.outs.begin(), g.outs.end());
    const int o = *outs.begin();
    QubitSet other_outs = outs;
    other_outs.erase(o);

    auto bottom = [&] {
        std::vector<Gate> ladder;
        for (int j : ins) ladder.push_back(Gate::cnot(o, j));
        for (int j : other_outs) ladder.push_back(Gate::cnot(o, j));
        QubitSet ctrls = g.ctrls;
        ctrls.insert(ins.begin(), ins.end());
        ctrls.insert(other_outs.begin(), other_outs.end());
        std::vector<Gate> out = ladder;
        append(out, conjugate_by_x(other_outs, compile_controlled_u2(g.block(), o, ctrls)));
        out.insert(out.end(), ladder.rbegin(), ladder.rend());
        return out;
    };
    auto top = [&] {
        const int a = *ins.begin();
        QubitSet other_ins = ins;
        other_ins.erase(a);
        std::vector<Gate> ladder;
        for (int j : other_ins) ladder.push_back(Gate::cnot(o, j));
        for (int j : other_outs) ladder.push_back(Gate::cnot(o, j));
        QubitSet ctrls = g.ctrls;
        ctrls.insert(other_ins.begin(), other_ins.end());
        ctrls.insert(other_outs.begin(), other_outs.end());
        std::vector<Gate> out = ladder;
        append(out, conjugate_by_x(other_outs, top_template(a, o, g.theta, g.phi, phased, ctrls)));
        out.insert(out.end(), ladder.rbegin(), ladder.rend());
        return out;
    };

    if (choice == Template::kBottom || ins.empty()) return bottom();
    if (choice == Template::kTop) return top();
    std::vector<Gate> t = top();
    std::vector<Gate> b = bottom();
    return count_cnots(b) < count_cnots(t) ? b : t;
}

}  // namespace

int count_cnots(const std::vector<Gate>& gates) {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::kCNOT; }));
}

std::vector<Gate> compile_mcrot(GateKind axis, int target, double angle, const QubitSet& ctrls) {
    if (axis != GateKind::kRy && axis != GateKind::kRz) throw InvalidArgument("multiplexed rotation axis must be Ry or Rz");
    const std::vector<int> c(ctrls.begin(), ctrls.end());
    const int l = static_cast<int>(c.size());
    if (l == 0) return {rotation(axis, target, angle)};
    if (l > 30) throw InvalidArgument("too many controls for the multiplexor");
    std::vector<Gate> out;
    const std::uint64_t steps = 1ULL << l;
    const double unit = angle / static_cast<double>(steps);
    for (std::uint64_t i = 0; i < steps; ++i) {
        const std::uint64_t gray = i ^ (i >> 1);
        out.push_back(rotation(axis, target, std::popcount(gray) % 2 ? -unit : unit));
        const int flip = i + 1 == steps ? l - 1 : std::countr_zero(i + 1);
        out.push_back(Gate::cnot(c[flip], target));
    }
    return out;
}

std::vector<Gate> compile_mcry(int target, double theta, const QubitSet& ctrls) {
    return compile_mcrot(GateKind::kRy, target, theta, ctrls);
}

std::vector<Gate> compile_controlled_u2(const Mat2& u, int target, const QubitSet& ctrls) {
    const Complex det = u[0] * u[3] - u[1] * u[2];
    if (std::abs(std::abs(det) - 1.0) > 1e-9) throw InvalidArgument("controlled gate matrix is not unitary");
    const double gamma = std::arg(det) / 2;
    const Complex unphase = std::polar(1.0, -gamma);
    const Mat2 w{u[0] * unphase, u[1] * unphase, u[2] * unphase, u[3] * unphase};
    std::vector<Gate> out = controlled_su2(w, target, ctrls);
    append(out, controlled_phase(gamma, ctrls));
    return out;
}

std::vector<Gate> compile_rbs(const Gate& g, std::optional<Template> choice) {
    if (g.kind != GateKind::kRBS && g.kind != GateKind::kComplexRBS)
        throw InvalidArgument("compile_rbs expects RBS or ComplexRBS");
    return mixing(g, choice);
}

std::vector<Gate> compile_grbs(const Gate& g, std::optional<Template> choice) { return mixing(g, choice); }

std::vector<Gate> compile_gate(const Gate& g) {
    if (g.is_mixing()) return mixing(g, std::nullopt);
    if (!g.anti_ctrls.empty()) {
        Gate inner = g;
        inner.ctrls.insert(g.anti_ctrls.begin(), g.anti_ctrls.end());
        inner.anti_ctrls.clear();
        return conjugate_by_x(g.anti_ctrls, compile_gate(inner));
    }
    const int t = g.target();
    const QubitSet& c = g.ctrls;
    switch (g.kind) {
        case GateKind::kX:
        case GateKind::kCNOT:
            if (c.empty()) return {Gate::x(t)};
            if (c.size() == 1) return {Gate::cnot(*c.begin(), t)};
            return compile_controlled_u2(g.block(), t, c);
        case GateKind::kRy:
            return compile_mcrot(GateKind::kRy, t, g.theta, c);
        case GateKind::kRz:
            return compile_mcrot(GateKind::kRz, t, g.phi, c);
        case GateKind::kRw:
            if (c.empty()) return {Gate::rw(t, g.theta, g.phi)};
            return compile_controlled_u2(g.block(), t, c);
        case GateKind::kAntiPhase:
            return compile_controlled_u2(g.block(), t, c);
        default:
            break;
    }
    throw InvalidArgument("cannot lower gate kind " + std::string(kind_name(g.kind)));
}

LoweringReport lower(const Circuit& logical) {
    logical.validate();
    LoweringReport r;
    r.circuit.n = logical.n;
    r.circuit.level = Level::kCnot;
    for (const Gate& g : logical.gates) {
        const std::vector<Gate> part = compile_gate(g);
        const int cx = count_cnots(part);
        r.cnots_per_gate.push_back(cx);
        r.total += cx;
        append(r.circuit.gates, part);
    }
    return r;
}

}  // namespace hwenc
