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

#include "hwenc/circuit_io.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "hwenc/error.h"
#include "json.hpp"

namespace hwenc {

using json = nlohmann::ordered_json;

namespace {

bool has_theta(GateKind k) {
    return k == GateKind::kRy || k == GateKind::kRw || k == GateKind::kRBS || k == GateKind::kComplexRBS ||
           k == GateKind::kGRBS;
}

bool has_phi(const Gate& g) {
    switch (g.kind) {
        case GateKind::kRz:
        case GateKind::kRw:
        case GateKind::kAntiPhase:
        case GateKind::kComplexRBS:
            return true;
        case GateKind::kGRBS:
            return g.phased;
        default:
            return false;
    }
}

template <typename Container>
Container int_list(const json& j, const char* key, std::size_t index) {
    if (!j.contains(key)) return {};
    const json& v = j.at(key);
    if (!v.is_array()) throw ParseError("gate " + std::to_string(index) + ": '" + key + "' must be an array");
    Container out;
    for (const json& e : v) {
        if (!e.is_number_integer()) throw ParseError("gate " + std::to_string(index) + ": '" + key + "' holds a non-integer");
        out.insert(out.end(), e.get<int>());
    }
    return out;
}

double number(const json& j, const char* key, std::size_t index) {
    if (!j.contains(key)) throw ParseError("gate " + std::to_string(index) + ": missing '" + key + "'");
    if (!j.at(key).is_number()) throw ParseError("gate " + std::to_string(index) + ": '" + key + "' is not a number");
    return j.at(key).get<double>();
}

}  // namespace

std::string to_json(const Circuit& c, int indent) {
    json j;
    j["n"] = c.n;
    j["level"] = c.level == Level::kLogical ? "logical" : "cnot";
    j["gates"] = json::array();
    for (const Gate& g : c.gates) {
        json e;
        e["kind"] = kind_name(g.kind);
        if (has_theta(g.kind)) e["theta"] = g.theta;
        if (has_phi(g)) e["phi"] = g.phi;
        e["ins"] = g.ins;
        e["outs"] = g.outs;
        e["ctrls"] = std::vector<int>(g.ctrls.begin(), g.ctrls.end());
        e["anti_ctrls"] = std::vector<int>(g.anti_ctrls.begin(), g.anti_ctrls.end());
        j["gates"].push_back(std::move(e));
    }
    return j.dump(indent);
}

Circuit circuit_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed circuit JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("gates"))
        throw ParseError("circuit JSON needs 'n' and 'gates'");
    if (!j.at("n").is_number_integer()) throw ParseError("'n' must be an integer");
    Circuit c;
    c.n = j.at("n").get<int>();
    const std::string level = j.value("level", "logical");
    if (level == "logical")
        c.level = Level::kLogical;
    else if (level == "cnot")
        c.level = Level::kCnot;
    else
        throw ParseError("unknown level '" + level + "'");
    if (!j.at("gates").is_array()) throw ParseError("'gates' must be an array");
    std::size_t index = 0;
    for (const json& e : j.at("gates")) {
        if (!e.is_object() || !e.contains("kind") || !e.at("kind").is_string())
            throw ParseError("gate " + std::to_string(index) + ": missing 'kind'");
        Gate g;
        try {
            g.kind = kind_from_name(e.at("kind").get<std::string>());
        } catch (const ParseError& err) {
            throw ParseError("gate " + std::to_string(index) + ": " + err.what());
        }
        if (has_theta(g.kind)) g.theta = number(e, "theta", index);
        g.phased = g.kind == GateKind::kGRBS && e.contains("phi");
        if (has_phi(g)) g.phi = number(e, "phi", index);
        g.ins = int_list<std::vector<int>>(e, "ins", index);
        g.outs = int_list<std::vector<int>>(e, "outs", index);
        g.ctrls = int_list<QubitSet>(e, "ctrls", index);
        g.anti_ctrls = int_list<QubitSet>(e, "anti_ctrls", index);
        c.gates.push_back(std::move(g));
        ++index;
    }
    try {
        c.validate();
    } catch (const InvalidArgument& err) {
        throw ParseError(err.what());
    }
    return c;
}

std::string format_angle(double radians) {
    if (radians == 0.0) return "0";
    const double ratio = radians / std::numbers::pi;
    for (int den : {1, 2, 3, 4, 6, 8, 12, 16, 32, 64}) {
        const double num = ratio * den;
        const double r = std::round(num);
        if (r != 0.0 && std::abs(num - r) < 1e-12 && std::abs(r) < 1e6) {
            const long p = static_cast<long>(r);
            std::string s;
            if (p == 1)
                s = "pi";
            else if (p == -1)
                s = "-pi";
            else
                s = std::to_string(p) + "*pi";
            if (den != 1) s += "/" + std::to_string(den);
            return s;
        }
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    return buf;
}

std::string emit_qasm(const Circuit& c) {
    if (c.level != Level::kCnot) throw InvalidArgument("QASM emission needs a CNOT-level circuit; lower it first");
    c.validate();
    std::ostringstream os;
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n << "];\n";
    auto wire = [&](int label) { return "q[" + std::to_string(c.n - label) + "]"; };
    for (const Gate& g : c.gates) {
        const std::string t = wire(g.target());
        switch (g.kind) {
            case GateKind::kX:
                os << "x " << t << ";\n";
                break;
            case GateKind::kRy:
                os << "ry(" << format_angle(2 * g.theta) << ") " << t << ";\n";
                break;
            case GateKind::kRz:
                os << "rz(" << format_angle(2 * g.phi) << ") " << t << ";\n";
                break;
            case GateKind::kRw:
                os << "ry(" << format_angle(2 * g.theta) << ") " << t << ";\n";
                os << "rz(" << format_angle(-2 * g.phi) << ") " << t << ";\n";
                break;
            case GateKind::kCNOT:
                os << "cx " << wire(*g.ctrls.begin()) << "," << t << ";\n";
                break;
            default:
                break;  // rejected by validate()
        }
    }
    return os.str();
}

}  // namespace hwenc
