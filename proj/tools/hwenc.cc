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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "hwenc/circuit_io.h"
#include "hwenc/compiler.h"
#include "hwenc/data_io.h"
#include "hwenc/demo.h"
#include "hwenc/encoders.h"
#include "hwenc/error.h"
#include "hwenc/resources.h"
#include "hwenc/simulator.h"

namespace {

using namespace hwenc;

struct OutputOptions {
    std::string level = "logical";
    std::string format = "json";
    std::string output;
    std::string ordering;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--level", o.level, "logical or cnot")->check(CLI::IsMember({"logical", "cnot"}));
    cmd->add_option("--format", o.format, "json or qasm")->check(CLI::IsMember({"json", "qasm"}));
    cmd->add_option("-o,--output", o.output, "circuit file (default stdout)");
    cmd->add_option("--ordering", o.ordering, "write the loaded basis order, one bitstring per line");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void emit_report(const EncoderReport& report, const OutputOptions& o) {
    Circuit c = report.circuit;
    if (o.level == "cnot") c = lower(c).circuit;
    if (o.format == "qasm" && c.level != Level::kCnot) throw InvalidArgument("qasm output needs --level cnot");
    write_text(o.output, o.format == "qasm" ? emit_qasm(c) : to_json(c, 2) + "\n");
    if (!o.ordering.empty()) {
        std::ostringstream os;
        for (const BitString& b : report.ordering) os << b.to_string() << '\n';
        write_text(o.ordering, os.str());
    }
    std::cerr << "params " << report.param_count << ", gates " << c.gates.size() << ", cnots " << c.cnot_count()
              << '\n';
}

void print_seed_header(std::uint64_t seed) { std::cout << "# seed " << seed << '\n'; }

std::vector<double> parse_rates(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string f; std::getline(ss, f, ',');) {
        try {
            out.push_back(std::stod(f));
        } catch (const std::exception&) {
            throw InvalidArgument("bad replacement rate '" + f + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamming-weight amplitude encoders: circuit construction, CNOT budgets, simulation"};
    app.require_subcommand(1);

    std::uint64_t seed = 7;
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed (printed in the output header)")->envname("HWENC_SEED");
    };

    // encode
    int n = 0, k = 0;
    bool complex_mode = false;
    std::string input;
    OutputOptions out_opts;
    auto* encode = app.add_subcommand("encode", "weight-k loader from a CSV vector in loader order");
    encode->add_option("--n", n, "qubits")->required();
    encode->add_option("--k", k, "Hamming weight")->required();
    encode->add_option("-i,--input", input, "vector CSV (re or re,im per row)")->required()->check(CLI::ExistingFile);
    encode->add_flag("--complex", complex_mode, "complex amplitudes");
    add_output_options(encode, out_opts);

    // sparse
    bool sort_by_weight = false;
    auto* sparse = app.add_subcommand("sparse", "loader for (value, bitstring) pairs");
    sparse->add_option("--n", n, "qubits")->required();
    sparse->add_option("-i,--input", input, "JSON array of {bits, re, im}")->required()->check(CLI::ExistingFile);
    sparse->add_flag("--complex", complex_mode, "complex amplitudes");
    sparse->add_flag("--sort-by-weight", sort_by_weight, "stable-sort the pairs by Hamming weight first");
    add_output_options(sparse, out_opts);

    // binary
    auto* binary = app.add_subcommand("binary", "full 2^n loader from a CSV vector");
    binary->add_option("--n", n, "qubits")->required();
    binary->add_option("-i,--input", input, "vector CSV")->required()->check(CLI::ExistingFile);
    binary->add_flag("--complex", complex_mode, "complex amplitudes");
    add_output_options(binary, out_opts);

    // count
    std::string count_mode = "analytic";
    bool count_binary_flag = false, as_json = false;
    int growth_n = 0;
    auto* count = app.add_subcommand("count", "CNOT budgets");
    count->add_option("--n", n, "qubits");
    count->add_option("--k", k, "Hamming weight (k > n/2 is mirrored)");
    count->add_flag("--complex", complex_mode, "complex loader");
    count->add_option("--mode", count_mode, "analytic, closed-form or actual")
        ->check(CLI::IsMember({"analytic", "closed-form", "actual"}));
    count->add_flag("--binary", count_binary_flag, "budget of the 2^n loader");
    count->add_option("--check-8n2n", growth_n, "check the binary budget against 8 n 2^n for n = 1..N");
    count->add_flag("--json", as_json, "JSON instead of a table");

    // simulate
    std::string circuit_path, noise_spec = "none";
    long shots = 0;
    auto* simulate = app.add_subcommand("simulate", "run a circuit file; exact probabilities when --shots is 0");
    simulate->add_option("circuit", circuit_path, "circuit JSON")->required()->check(CLI::ExistingFile);
    simulate->add_option("--shots", shots, "number of shots (0 = exact)")->check(CLI::NonNegativeNumber);
    simulate->add_option("--noise", noise_spec, "none or depol:P (two-qubit depolarizing after each CNOT)");
    add_seed(simulate);

    // demo qgaussian
    auto* demo = app.add_subcommand("demo", "end-to-end demonstrations");
    demo->require_subcommand(1);
    DemoConfig dc;
    std::string mitigate = "none", rates = "0.79,0.83,0.90,0.95,1.00";
    long cdr_shots = -1;
    auto* qg = demo->add_subcommand("qgaussian", "discretized q-Gaussian, sampled under noise, optionally mitigated");
    qg->add_option("--q", dc.spec.q, "q-exponential index (< 3)");
    qg->add_option("--beta", dc.spec.beta, "inverse width (> 0)");
    qg->add_option("--lo", dc.spec.lo, "left end of the grid");
    qg->add_option("--hi", dc.spec.hi, "right end of the grid");
    qg->add_option("--points", dc.spec.points, "grid points");
    qg->add_option("--n", dc.n, "qubits");
    qg->add_option("--k", dc.k, "Hamming weight");
    qg->add_option("--shots", dc.shots, "shots of the measured circuit");
    qg->add_option("--noise", noise_spec, "none or depol:P");
    qg->add_option("--mitigate", mitigate, "none or cdr")->check(CLI::IsMember({"none", "cdr"}));
    qg->add_option("--cdr-rates", rates, "comma-separated replacement rates");
    qg->add_option("--cdr-circuits", dc.cdr.circuits_per_rate, "training circuits per rate");
    qg->add_option("--cdr-shots", cdr_shots, "shots per training circuit (default: --shots)");
    qg->add_option("--bootstrap", dc.bootstrap, "bootstrap resamples for 5-95% bands (0 = off)");
    qg->add_option("--threads", dc.threads, "worker threads for the training set (0 = all cores)");
    add_seed(qg);

    CLI11_PARSE(app, argc, argv);

    try {
        const Mode mode = complex_mode ? Mode::kComplex : Mode::kReal;
        if (encode->parsed()) {
            emit_report(encode_dense(n, k, read_vector_csv_file(input, mode)), out_opts);
        } else if (sparse->parsed()) {
            SparseOptions so;
            so.sort_by_weight = sort_by_weight;
            SparseTuple y = read_sparse_json_file(input, mode);
            for (const SparseEntry& e : y.pairs)
                if (e.address.size() != n)
                    throw InvalidArgument("bitstring " + e.address.to_string() + " does not have " +
                                          std::to_string(n) + " bits");
            emit_report(encode_sparse(n, y, so), out_opts);
        } else if (binary->parsed()) {
            emit_report(encode_binary(n, read_vector_csv_file(input, mode)), out_opts);
        } else if (count->parsed()) {
            if (growth_n > 0) {
                bool all_ok = true;
                std::cout << "n,count,bound,ok\n";
                for (const GrowthCheck& g : check_8n2n(growth_n)) {
                    std::cout << g.n << ',' << g.count << ',' << g.bound << ',' << (g.ok ? "yes" : "no") << '\n';
                    all_ok = all_ok && g.ok;
                }
                return all_ok ? 0 : 1;
            }
            if (n < 1) throw InvalidArgument("--n is required");
            CnotBudget budget;
            EncoderReport report;
            const bool need_report = count_mode == "actual";
            if (count_binary_flag) {
                budget = count_binary(n);
                if (need_report) report = encode_binary(n, DataVector::real(std::vector<double>(std::size_t{1} << n, 1.0)));
            } else {
                if (k < 1 || k >= n) throw InvalidArgument("--k must satisfy 1 <= k < n");
                const int kk = 2 * k > n ? n - k : k;
                budget = count_dense(n, kk, complex_mode);
                if (need_report) {
                    const std::size_t d = binomial(n, k);
                    if (d > (std::size_t{1} << 20)) throw InvalidArgument("too many amplitudes for --mode actual");
                    std::vector<Complex> ones(d, Complex(1.0, complex_mode ? 1.0 : 0.0));
                    report = encode_dense(n, k, complex_mode ? DataVector::complex(ones)
                                                             : DataVector::real(std::vector<double>(d, 1.0)));
                }
            }
            if (need_report) attach_actual(budget, report);
            long long total = budget.total_analytic;
            if (count_mode == "closed-form") {
                if (!budget.total_closed_form) throw InvalidArgument("no closed form for this budget");
                total = *budget.total_closed_form;
            } else if (count_mode == "actual") {
                total = *budget.total_actual;
            }
            if (as_json) {
                nlohmann::ordered_json j = nlohmann::ordered_json::parse(budget_json(budget));
                j["mode"] = count_mode;
                j["total"] = total;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << budget_table(budget) << "total " << total << '\n';
            }
        } else if (simulate->parsed()) {
            Circuit c = circuit_from_json(read_text_file(circuit_path));
            NoiseModel noise = parse_noise(noise_spec);
            print_seed_header(seed);
            if (shots == 0) {
                if (noise.p2 > 0.0) throw InvalidArgument("noisy simulation needs --shots > 0");
                write_values_csv(std::cout, probabilities(run(c)));
            } else if (noise.p2 > 0.0) {
                if (c.level != Level::kCnot) c = lower(c).circuit;
                write_counts_csv(std::cout, run_noisy(c, noise, shots, seed));
            } else {
                write_counts_csv(std::cout, sample(run(c), shots, seed));
            }
        } else if (qg->parsed()) {
            dc.noise = parse_noise(noise_spec);
            dc.mitigate = mitigate == "cdr";
            dc.cdr.replacement_rates = parse_rates(rates);
            dc.cdr.shots = cdr_shots > 0 ? cdr_shots : dc.shots;
            dc.seed = seed;
            const DemoResult r = run_qgaussian_demo(dc);
            print_seed_header(seed);
            std::cout << "# noise " << noise_spec << ", shots " << dc.shots << ", cnots " << r.cnot_count << '\n';
            std::cout << "# mean_rel_err_raw " << r.mean_rel_err_raw << '\n';
            if (r.mean_rel_err_mitigated) std::cout << "# mean_rel_err_mitigated " << *r.mean_rel_err_mitigated << '\n';
            int degenerate = 0;
            for (const RegressionFit& f : r.fits) degenerate += f.degenerate;
            if (degenerate) std::cout << "# identity_fallback_fits " << degenerate << '\n';
            write_demo_csv(std::cout, r);
        }
    } catch (const VerificationError& e) {
        std::cerr << "hwenc: error kind=VerificationError gate=" << e.gate_index() << " message=\"" << e.what()
                  << "\"\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "hwenc: error kind=ParseError message=\"" << e.what() << "\"\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "hwenc: error kind=InvalidArgument message=\"" << e.what() << "\"\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "hwenc: error kind=Error message=\"" << e.what() << "\"\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "hwenc: error kind=Internal message=\"" << e.what() << "\"\n";
        return 1;
    }
    return 0;
}
