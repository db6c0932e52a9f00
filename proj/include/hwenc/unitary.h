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

#include <Eigen/Dense>

#include "hwenc/circuit.h"

namespace hwenc {

constexpr int kMaxDenseQubits = 12;

/// Dense 2^n x 2^n matrix of one gate, assembled from Kronecker products of
/// single-wire projectors and transition operators. Basis index = word (label q is
/// bit q - 1). Throws InvalidArgument for n > kMaxDenseQubits.
Eigen::MatrixXcd gate_unitary(const Gate& g, int n);

/// Ordered product of gate unitaries (first gate rightmost).
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// Largest entrywise deviation between a and e^{i alpha} b, with alpha fitted on the
/// largest-modulus entry of b.
double phase_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol);

}  // namespace hwenc
