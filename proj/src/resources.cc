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

#include "hwenc/resources.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hwenc/compiler.h"
#include "hwenc/error.h"
#include "json.hpp"

namespace hwenc {

namespace {

constexpr long long kSmallControlled[] = {0, 2, 4, 12, 36};
constexpr long long kRbsReal[] = {2, 6, 10, 26, 58};
constexpr long long kRbsComplex[] = {2, 6, 14, 38, 84};

void check_ell(int ell) {
    if (ell < 0) throw InvalidArgument("control count must be non-negative");
}

long long rbs_cost(int ell, bool complex) {
    check_ell(ell);
    if (ell <= 4) return complex ? kRbsComplex[ell] : kRbsReal[ell];
    return complex ? 20LL * ell + 4 : 16LL * ell - 6;
}

long long binom_ll(int n, int k) {
    const std::uint64_t b = binomial(n, k);
    if (b > static_cast<std::uint64_t>(1) << 62) throw InvalidArgument("binomial coefficient overflows the counter");
    return static_cast<long long>(b);
}

long long exact_div(long long num, long long den) {
    if (num % den != 0) throw Error("closed form is not integral");
    return num / den;
}

}  // namespace

long long mcry_cnots(int ell) {
    check_ell(ell);
    return ell <= 4 ? kSmallControlled[ell] : 16LL * ell - 24;
}

long long mcu_cnots(int ell) {
    check_ell(ell);
    return ell <= 4 ? kSmallControlled[ell] : 20LL * ell - 18;
}

long long table1_bound(CostKind kind, int ell, int m, int m2, bool complex) {
    check_ell(ell);
    switch (kind) {
        case CostKind::kRy:
            return complex ? mcu_cnots(ell) : mcry_cnots(ell);
        case CostKind::kRBS:
            return rbs_cost(ell, complex);
        case CostKind::kGRBS:
            break;
    }
    if (m < 0 || m2 < 1) throw InvalidArgument("gRBS needs m >= 0 inputs and m2 >= 1 outputs");
    const int total = m + m2;
    if (m == 1 && m2 == 1) return rbs_cost(ell, complex);
    if (total == 1) return complex ? mcu_cnots(ell) : mcry_cnots(ell);
    if (total == 2) {
        // both wires are outputs, so only the ladder-plus-central-rotation template applies
        return 2LL + (complex ? mcu_cnots(ell + 1) : mcry_cnots(ell + 1));
    }
    return complex ? 22LL * total + 20LL * ell - 20 : 18LL * total + 16LL * ell - 42;
}

long long dense_closed_form(int n, int k, bool complex) {
    if (n < 2 || k < 1 || 2 * k > n) throw InvalidArgument("closed form needs n >= 2 and 1 <= k <= n/2");
    const long long N = n;
    switch (k) {
        case 1:
            return 2 * (N - 1);
        case 2:
            return (N - 2) * (3 * N - 1);
        case 3:
            return complex ? exact_div((N - 3) * (7 * N * N - 12 * N + 2), 3) : exact_div((N - 3) * (5 * N * N - 6 * N - 2), 3);
        case 4:
            return complex ? exact_div((N - 4) * (19 * N * N * N - 86 * N * N + 105 * N - 30), 12)
                           : exact_div((N - 4) * (13 * N * N * N - 58 * N * N + 79 * N - 42), 12);
        default:
            break;
    }
    const long long t = N - k;
    const long long a[4] = {complex ? 230 : 178, complex ? 329 : 239, complex ? 142 : 98, complex ? 19 : 13};
    long long poly = 0, power = 1;
    for (long long coeff : a) {
        power *= t;
        poly += coeff * power;
    }
    long long tail = 0;
    for (int ell = 4; ell <= k - 1; ++ell) tail += binom_ll(n - (k - ell), ell + 1) * rbs_cost(ell, complex);
    return exact_div(poly, 12) + tail;
}

CnotBudget count_dense(int n, int k, bool complex) {
    if (n < 2 || k < 1 || 2 * k > n) {
        throw InvalidArgument("count_dense needs 1 <= k <= n/2 (count the weight n-k instance instead)");
    }
    CnotBudget b;
    for (int ell = 0; ell < k; ++ell) {
        BudgetRow row{"rbs", ell, binom_ll(n - (k - ell), ell + 1), rbs_cost(ell, complex)};
        b.total_analytic += row.gate_count * row.cnots_per_gate;
        b.per_ell.push_back(row);
    }
    b.total_closed_form = dense_closed_form(n, k, complex);
    return b;
}

long long binary_closed_form(int n) {
    if (n < 1) throw InvalidArgument("binary loader needs n >= 1");
    const long long N = n;
    long long total = exact_div(13 * N * N * N * N - 58 * N * N * N + 119 * N * N - 50 * N + 120, 12);
    for (int k = 5; k <= n; ++k) total += binom_ll(n, k) * (16LL * k - 22) - 2;
    return total;
}

CnotBudget count_binary(int n) {
    if (n < 1 || n > 40) throw InvalidArgument("count_binary supports 1 <= n <= 40");
    CnotBudget b;
    for (int k = 1; k <= n; ++k) {
        const long long loads = binom_ll(n, k) - 1;
        if (loads > 0) {
            BudgetRow row{"rbs", k - 1, loads, rbs_cost(k - 1, false)};
            b.total_analytic += row.gate_count * row.cnots_per_gate;
            b.per_ell.push_back(row);
        }
        BudgetRow bridge{"ry", k, 1, mcry_cnots(k)};
        b.total_analytic += bridge.cnots_per_gate;
        b.per_ell.push_back(bridge);
    }
    b.total_closed_form = binary_closed_form(n);
    return b;
}

CnotBudget count_sparse(const EncoderReport& report) {
    CnotBudget b;
    const bool complex = report.mode == Mode::kComplex;
    for (const Gate& g : report.circuit.gates) {
        if (!g.is_mixing()) continue;
        const bool plain = g.kind != GateKind::kGRBS || (g.ins.size() == 1 && g.outs.size() == 1);
        const long long cost = table1_bound(plain ? CostKind::kRBS : CostKind::kGRBS, g.control_count(),
                                            static_cast<int>(g.ins.size()), static_cast<int>(g.outs.size()), complex);
        b.per_ell.push_back({plain ? "rbs" : "grbs", g.control_count(), 1, cost});
        b.total_analytic += cost;
    }
    return b;
}

void attach_actual(CnotBudget& budget, const EncoderReport& report) { budget.total_actual = lower(report.circuit).total; }

std::vector<GrowthCheck> check_8n2n(int n_max) {
    if (n_max < 1 || n_max > 30) throw InvalidArgument("check_8n2n supports 1 <= n_max <= 30");
    std::vector<GrowthCheck> out;
    for (int n = 1; n <= n_max; ++n) {
        GrowthCheck c;
        c.n = n;
        c.count = count_binary(n).total_analytic;
        c.bound = 8LL * n * (1LL << n);
        c.ok = c.count <= c.bound;
        out.push_back(c);
    }
    return out;
}

std::string budget_json(const CnotBudget& b) {
    nlohmann::ordered_json j;
    j["per_ell"] = nlohmann::ordered_json::array();
    for (const BudgetRow& r : b.per_ell) {
        j["per_ell"].push_back({{"kind", r.kind},
                                {"ell", r.ell},
                                {"gate_count", r.gate_count},
                                {"cnots_per_gate", r.cnots_per_gate},
                                {"subtotal", r.gate_count * r.cnots_per_gate}});
    }
    j["total_analytic"] = b.total_analytic;
    if (b.total_closed_form) j["total_closed_form"] = *b.total_closed_form;
    if (b.total_actual) j["total_actual"] = *b.total_actual;
    return j.dump(2);
}

std::string budget_table(const CnotBudget& b) {
    std::ostringstream os;
    char line[128];
    std::snprintf(line, sizeof(line), "%-6s %4s %12s %14s %12s\n", "kind", "ell", "gates", "cnots/gate", "subtotal");
    os << line;
    for (const BudgetRow& r : b.per_ell) {
        std::snprintf(line, sizeof(line), "%-6s %4d %12lld %14lld %12lld\n", r.kind.c_str(), r.ell, r.gate_count,
                      r.cnots_per_gate, r.gate_count * r.cnots_per_gate);
        os << line;
    }
    os << "total_analytic " << b.total_analytic << "\n";
    if (b.total_closed_form) os << "total_closed_form " << *b.total_closed_form << "\n";
    if (b.total_actual) os << "total_actual " << *b.total_actual << "\n";
    return os.str();
}

}  // namespace hwenc
