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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "hwenc/circuit_io.h"
#include "hwenc/compiler.h"
#include "hwenc/demo.h"
#include "hwenc/encoders.h"
#include "hwenc/error.h"
#include "hwenc/qgaussian.h"
#include "hwenc/resources.h"
#include "hwenc/simulator.h"

namespace py = pybind11;
using namespace hwenc;

namespace {

DataVector to_data(const std::vector<Complex>& values, bool complex) {
    DataVector v = DataVector::complex(values);
    if (!complex) v.mode = Mode::kReal;
    return v;
}

py::dict report_dict(const EncoderReport& r) {
    py::dict d;
    d["circuit"] = to_json(r.circuit);
    std::vector<std::string> order;
    for (const BitString& b : r.ordering) order.push_back(b.to_string());
    d["ordering"] = order;
    d["param_count"] = r.param_count;
    return d;
}

std::map<std::string, Complex> amplitudes(const std::string& circuit_json) {
    const SparseState s = run(circuit_from_json(circuit_json));
    std::map<std::string, Complex> out;
    for (std::uint64_t w : s.support()) out[BitString(s.n, w).to_string()] = s.amplitude(w);
    return out;
}

std::map<std::string, long> sample_counts(const std::string& circuit_json, long shots, std::uint64_t seed, double p2) {
    Circuit c = circuit_from_json(circuit_json);
    std::map<BitString, long> counts;
    if (p2 > 0.0) {
        if (c.level != Level::kCnot) c = lower(c).circuit;
        counts = run_noisy(c, {p2, seed}, shots);
    } else {
        counts = sample(run(c), shots, seed);
    }
    std::map<std::string, long> out;
    for (const auto& [b, k] : counts) out[b.to_string()] = k;
    return out;
}

py::list demo_rows(int n, int k, double q, double beta, int points, long shots, double p2, bool mitigate,
                   std::uint64_t seed) {
    DemoConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.spec.q = q;
    cfg.spec.beta = beta;
    cfg.spec.points = points;
    cfg.shots = shots;
    cfg.noise.p2 = p2;
    cfg.mitigate = mitigate;
    cfg.seed = seed;
    const DemoResult r = run_qgaussian_demo(cfg);
    py::list rows;
    for (const DemoRow& row : r.rows) {
        py::dict d;
        d["x"] = row.x;
        d["bitstring"] = row.bits.to_string();
        d["target"] = row.target;
        d["raw"] = row.raw;
        d["mitigated"] = row.mitigated ? py::cast(*row.mitigated) : py::none();
        rows.append(d);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hamming-weight state loaders, CNOT lowering and counting";

    static py::exception<Error> error(m, "Error");
    static py::exception<InvalidArgument> invalid(m, "InvalidArgument", error.ptr());
    static py::exception<ParseError> parse(m, "ParseError", error.ptr());
    static py::exception<VerificationError> verify(m, "VerificationError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidArgument& e) {
            py::set_error(invalid, e.what());
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const VerificationError& e) {
            py::set_error(verify, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    m.def(
        "encode_dense",
        [](int n, int k, const std::vector<Complex>& values, bool complex) {
            return report_dict(encode_dense(n, k, to_data(values, complex)));
        },
        py::arg("n"), py::arg("k"), py::arg("values"), py::arg("complex") = false,
        "Weight-k loader; returns circuit JSON, basis ordering and parameter count.");
    m.def(
        "encode_sparse",
        [](int n, const std::vector<std::pair<std::string, Complex>>& pairs, bool complex, bool sort_by_weight) {
            SparseTuple y;
            y.mode = complex ? Mode::kComplex : Mode::kReal;
            for (const auto& [bits, v] : pairs) y.pairs.push_back({v, BitString::parse(bits)});
            SparseOptions opt;
            opt.sort_by_weight = sort_by_weight;
            return report_dict(encode_sparse(n, y, opt));
        },
        py::arg("n"), py::arg("pairs"), py::arg("complex") = false, py::arg("sort_by_weight") = false);
    m.def(
        "encode_binary",
        [](int n, const std::vector<Complex>& values, bool complex) {
            return report_dict(encode_binary(n, to_data(values, complex)));
        },
        py::arg("n"), py::arg("values"), py::arg("complex") = false);
    m.def(
        "lower",
        [](const std::string& circuit_json) {
            const LoweringReport r = lower(circuit_from_json(circuit_json));
            return py::make_tuple(to_json(r.circuit), r.total);
        },
        py::arg("circuit"), "Lowers to CNOT level; returns (circuit JSON, CNOT count).");
    m.def(
        "to_qasm", [](const std::string& circuit_json) { return emit_qasm(circuit_from_json(circuit_json)); },
        py::arg("circuit"));
    m.def("amplitudes", &amplitudes, py::arg("circuit"), "Exact nonzero amplitudes keyed by bitstring.");
    m.def("sample", &sample_counts, py::arg("circuit"), py::arg("shots"), py::arg("seed") = 7, py::arg("p2") = 0.0);
    m.def(
        "count_dense", [](int n, int k, bool complex) { return budget_json(count_dense(n, k, complex)); },
        py::arg("n"), py::arg("k"), py::arg("complex") = false);
    m.def(
        "count_binary", [](int n) { return budget_json(count_binary(n)); }, py::arg("n"));
    m.def(
        "rbs_cnots", [](int ell, bool complex) { return table1_bound(CostKind::kRBS, ell, 1, 1, complex); },
        py::arg("ell"), py::arg("complex") = false);
    m.def(
        "qgaussian_probabilities",
        [](double q, double beta, double lo, double hi, int points) {
            QGaussianSpec spec{q, beta, lo, hi, points};
            return qgaussian_probabilities(spec);
        },
        py::arg("q") = 1.5, py::arg("beta") = 2.0, py::arg("lo") = -2.0, py::arg("hi") = 2.0, py::arg("points") = 15);
    m.def("qgaussian_demo", &demo_rows, py::arg("n") = 6, py::arg("k") = 2, py::arg("q") = 1.5, py::arg("beta") = 2.0,
          py::arg("points") = 15, py::arg("shots") = 10000, py::arg("p2") = 0.0, py::arg("mitigate") = false,
          py::arg("seed") = 7);
}
