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

#include <optional>
#include <vector>

#include "hwenc/circuit.h"

namespace hwenc {

enum class Template { kTop, kBottom };

/// l-controlled Ry or Rz via the Gray-code multiplexor: 2^l CNOTs, exact.
std::vector<Gate> compile_mcrot(GateKind axis, int target, double angle, const QubitSet& ctrls);

/// l-controlled Ry.
std::vector<Gate> compile_mcry(int target, double theta, const QubitSet& ctrls);

/// l-controlled arbitrary 2x2 unitary: an SU(2) part conjugated onto a multiplexed Rz,
/// followed by a controlled phase on the controls (global phase dropped when l = 0).
std::vector<Gate> compile_controlled_u2(const Mat2& u, int target, const QubitSet& ctrls);

/// RBS / ComplexRBS with any controls. Without `choice` the template with fewer CNOTs
/// is used (Top on a tie).
std::vector<Gate> compile_rbs(const Gate& g, std::optional<Template> choice = std::nullopt);

/// GRBS: a CNOT ladder from the lowest output reduces the pair to one (Bottom) or two
/// (Top) wires, the remaining inputs and outputs become controls and anti-controls.
std::vector<Gate> compile_grbs(const Gate& g, std::optional<Template> choice = std::nullopt);

/// Any logical gate; anti-controls are lowered by X conjugation.
std::vector<Gate> compile_gate(const Gate& g);

struct LoweringReport {
    Circuit circuit;
    std::vector<int> cnots_per_gate;  // one entry per logical gate
    int total = 0;
};

LoweringReport lower(const Circuit& logical);

int count_cnots(const std::vector<Gate>& gates);

}  // namespace hwenc
