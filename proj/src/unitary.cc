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

#include "hwenc/unitary.h"

#include <limits>
#include <string>
#include <vector>

#include "hwenc/error.h"

namespace hwenc {

namespace {

using Mat = Eigen::MatrixXcd;
using M2 = Eigen::Matrix2cd;

// Kronecker product of per-wire 2x2 factors, label n leftmost.
Mat kron_chain(const std::vector<M2>& per_label) {
    Mat out = Mat::Identity(1, 1);
    for (const M2& f : per_label) {
        Mat next(out.rows() * 2, out.cols() * 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = f(r, c) * out;
        out = std::move(next);
    }
    return out;
}

M2 ket_bra(int row, int col) {
    M2 m = M2::Zero();
    m(row, col) = 1.0;
    return m;
}

}  // namespace

Mat gate_unitary(const Gate& g, int n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw InvalidArgument("dense unitary limited to 1.." + std::to_string(kMaxDenseQubits) + " qubits, got " +
                              std::to_string(n));
    }
    for (int q : g.wires())
        if (q < 1 || q > n) throw InvalidArgument("gate touches label " + std::to_string(q) + " outside the register");

    // pair states: e0 has ins = 1 and outs = 0, e1 the opposite; single-qubit kinds use |0>, |1>
    std::vector<int> e0_bit(static_cast<std::size_t>(n) + 1, -1);
    for (int q : g.ins) e0_bit[q] = 1;
    for (int q : g.outs) e0_bit[q] = 0;
    // a CNOT's own control is an ordinary control of its X block
    const QubitSet& pos = g.ctrls;
    const QubitSet& neg = g.anti_ctrls;
    const Mat2 b = g.block();
    const std::size_t dim = std::size_t{1} << n;
    Mat u = Mat::Identity(dim, dim);
    auto term = [&](int i, int j) {
        std::vector<M2> f(static_cast<std::size_t>(n), M2::Identity());
        for (int q = 1; q <= n; ++q) {
            if (pos.count(q)) f[q - 1] = ket_bra(1, 1);
            if (neg.count(q)) f[q - 1] = ket_bra(0, 0);
            if (e0_bit[q] >= 0) {
                const int ri = i == 0 ? e0_bit[q] : 1 - e0_bit[q];
                const int cj = j == 0 ? e0_bit[q] : 1 - e0_bit[q];
                f[q - 1] = ket_bra(ri, cj);
            }
        }
        return kron_chain(f);
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Complex coeff = b[2 * i + j] - (i == j ? Complex(1.0) : Complex(0.0));
            if (coeff != Complex(0.0)) u += coeff * term(i, j);
        }
    return u;
}

Mat circuit_unitary(const Circuit& c) {
    const std::size_t dim = std::size_t{1} << c.n;
    Mat u = Mat::Identity(dim, dim);
    for (const Gate& g : c.gates) u = gate_unitary(g, c.n) * u;
    return u;
}

double phase_deviation(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    Complex phase(1.0);
    if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
        phase = a(r, c) / b(r, c);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const Mat& a, const Mat& b, double tol) { return phase_deviation(a, b) < tol; }

}  // namespace hwenc
