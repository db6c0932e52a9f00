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
#include <string>
#include <vector>

#include "hwenc/circuit.h"
#include "hwenc/encoders.h"

namespace hwenc {

/// Gate family of a tabulated CNOT cost.
enum class CostKind { kRy, kRBS, kGRBS };

/// CNOTs of an l-controlled Ry (tabulated for l <= 4, linear bound beyond).
long long mcry_cnots(int ell);
/// CNOTs of an l-controlled generic single-qubit gate.
long long mcu_cnots(int ell);

/// Tabulated CNOT cost (or bound) for an l-controlled gate. For kGRBS, m inputs and
/// m2 outputs; m = m2 = 1 is the RBS column, m + m2 = 1 the single-rotation column and
/// m = 0, m2 = 2 costs a two-CNOT ladder around an (l+1)-controlled rotation.
long long table1_bound(CostKind kind, int ell, int m = 1, int m2 = 1, bool complex = false);

struct BudgetRow {
    std::string kind;  // "rbs", "grbs" or "ry"
    int ell = 0;
    long long gate_count = 0;
    long long cnots_per_gate = 0;
};

struct CnotBudget {
    std::vector<BudgetRow> per_ell;
    long long total_analytic = 0;                  // sum over per_ell
    std::optional<long long> total_closed_form;    // polynomial formula where one exists
    std::optional<long long> total_actual;         // from the compiler
};

/// Weight-k loader budget; requires 1 <= k <= n/2.
CnotBudget count_dense(int n, int k, bool complex);
/// Closed-form polynomial for the weight-k loader.
long long dense_closed_form(int n, int k, bool complex);

/// Binary loader: stage k costs (binom(n,k) - 1) fully controlled RBS gates plus one
/// k-controlled Ry, k = 1..n.
CnotBudget count_binary(int n);
/// Quartic-plus-tail formula for the binary loader.
long long binary_closed_form(int n);

/// Sums the tabulated cost of every mixing gate in a loader circuit.
CnotBudget count_sparse(const EncoderReport& report);

/// Lowers the report's circuit and records the CNOT total as total_actual.
void attach_actual(CnotBudget& budget, const EncoderReport& report);

struct GrowthCheck {
    int n = 0;
    long long count = 0;
    long long bound = 0;  // 8 n 2^n
    bool ok = false;
};
std::vector<GrowthCheck> check_8n2n(int n_max);

std::string budget_json(const CnotBudget& b);
std::string budget_table(const CnotBudget& b);

}  // namespace hwenc
