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

#include <string>

#include "hwenc/circuit.h"

namespace hwenc {

/// {"n":..,"level":"logical"|"cnot","gates":[{"kind","theta"?,"phi"?,"ins","outs","ctrls","anti_ctrls"}]}
std::string to_json(const Circuit& c, int indent = -1);
/// Throws ParseError naming the offending gate index on schema violations.
Circuit circuit_from_json(const std::string& text);

/// OpenQASM 2.0 text with x / ry / rz / cx. Wire index = n - label. Angles are doubled
/// into the standard half-angle convention; Rw becomes an ry followed by an rz.
std::string emit_qasm(const Circuit& c);

/// Prints pi-rational angles symbolically ("pi/2", "-3*pi/4"), otherwise full precision.
std::string format_angle(double radians);

}  // namespace hwenc
