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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hwenc/bitstring.h"

namespace hwenc {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major {m00, m01, m10, m11}

enum class GateKind { kX, kRy, kRz, kRw, kAntiPhase, kRBS, kComplexRBS, kGRBS, kCNOT };

enum class Level { kLogical, kCnot };

std::string_view kind_name(GateKind kind);
GateKind kind_from_name(std::string_view name);  // throws ParseError

/// One gate of the IR.
///
/// Mixing gates (RBS, ComplexRBS, GRBS) rotate the pair |b> (all `ins` set, all
/// `outs` clear) and |b'> (ins clear, outs set):
///   |b>  -> e^{i phi} cos(theta) |b> + e^{-i phi} sin(theta) |b'>
///   |b'> -> -e^{i phi} sin(theta) |b> + e^{-i phi} cos(theta) |b'>
/// Single-qubit kinds keep their target as the only entry of `outs`; a CNOT stores its
/// control in `ctrls`. Rotations are half-angle free: Ry(t) = exp(-i t Y), Rz(t) =
/// exp(-i t Z) with the Rz angle held in `phi`. Rw(theta, phi) = Rz(-phi) Ry(theta),
/// the single-wire image of the ComplexRBS block. AntiPhase(phi) = diag(e^{i phi}, 1).
struct Gate {
    GateKind kind = GateKind::kX;
    double theta = 0.0;
    double phi = 0.0;
    bool phased = false;  // GRBS only: carries a phase parameter
    std::vector<int> ins;
    std::vector<int> outs;
    QubitSet ctrls;
    QubitSet anti_ctrls;

    static Gate x(int target);
    static Gate ry(int target, double theta);
    static Gate rz(int target, double phi);
    static Gate rw(int target, double theta, double phi);
    static Gate anti_phase(int target, double phi);
    static Gate rbs(int in, int out, double theta);
    static Gate complex_rbs(int in, int out, double theta, double phi);
    static Gate grbs(const QubitSet& ins, const QubitSet& outs, double theta);
    static Gate complex_grbs(const QubitSet& ins, const QubitSet& outs, double theta, double phi);
    static Gate cnot(int control, int target);

    Gate controlled_by(const QubitSet& c) const;
    Gate anti_controlled_by(const QubitSet& c) const;

    bool is_mixing() const;
    bool is_single_qubit() const;
    int target() const;  // single-qubit kinds and CNOT
    /// Controls plus anti-controls (a CNOT's own control excluded).
    int control_count() const;
    /// Number of free real parameters.
    int parameter_count() const;
    /// The 2x2 block on (|b>, |b'>), or on (|0>, |1>) of the target.
    Mat2 block() const;
    /// Every wire the gate touches.
    QubitSet wires() const;

    friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
    int n = 1;
    Level level = Level::kLogical;
    std::vector<Gate> gates;

    /// Label ranges, disjointness, kind arity and the level's gate set. Throws
    /// InvalidArgument naming the gate index.
    void validate() const;
    int cnot_count() const;
    int parameter_count() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Bit-level description of how a gate acts on computational basis words.
///
/// A word w is eligible when (w & control_mask) == control_value; eligible words with
/// (w & flip_mask) == pattern0 or pattern0 ^ flip_mask form the rotated pair, ordered
/// (pattern0, pattern0 ^ flip_mask). Every other word is fixed.
struct GateAction {
    std::uint64_t control_mask = 0;
    std::uint64_t control_value = 0;
    std::uint64_t flip_mask = 0;
    std::uint64_t pattern0 = 0;
    Mat2 m{};
};

GateAction action_of(const Gate& g);

Mat2 mat_ry(double theta);
Mat2 mat_rz(double phi);
Mat2 mat_rw(double theta, double phi);
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_adjoint(const Mat2& a);

}  // namespace hwenc
