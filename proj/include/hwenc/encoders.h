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

#include <cstdint>
#include <vector>

#include "hwenc/circuit.h"
#include "hwenc/coordinates.h"

namespace hwenc {

/// Logical circuit plus the basis ordering it loads: amplitude i lands on ordering[i].
struct EncoderReport {
    Circuit circuit;
    std::vector<BitString> ordering;
    int param_count = 0;
    Mode mode = Mode::kReal;
};

struct SparseEntry {
    Complex value;
    BitString address;
};

struct SparseTuple {
    std::vector<SparseEntry> pairs;
    Mode mode = Mode::kReal;
};

struct SparseOptions {
    bool sort_by_weight = false;  // stable sort by Hamming weight before validation
    bool verify = true;           // simulate and check every loading step
};

/// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Weight-k loader for d <= binom(n, k) entries. For k > n/2 the circuit is built on the
/// complemented weight-(n-k) sequence with anti-controls.
EncoderReport encode_dense_real(int n, int k, const DataVector& x);
/// Same placement with complex mixing gates and a closing controlled anti-phase.
EncoderReport encode_dense_complex(int n, int k, const DataVector& x);
/// Dispatches on x.mode.
EncoderReport encode_dense(int n, int k, const DataVector& x);

/// Loader for s (value, address) pairs with non-decreasing address weight. Unless
/// disabled, the result is simulated gate by gate and VerificationError is thrown,
/// naming the gate, if a previously loaded amplitude moves.
EncoderReport encode_sparse(int n, const SparseTuple& y, const SparseOptions& options = {});

/// Full 2^n loader built by chaining weight-k loaders with multi-controlled bridges.
EncoderReport encode_binary(int n, const DataVector& x);

/// Seeds of every weight stage of the binary loader (index k = weight), and the
/// label each bridge sets (index k = bridge from weight k to k + 1).
struct BinaryStage {
    EhrlichState seed;
    int bridge_target = 0;
    QubitSet bridge_ctrls;
};
std::vector<BinaryStage> binary_stages(int n);

/// Ordering used by the dense loaders (complemented when k > n/2).
std::vector<BitString> dense_ordering(int n, int k, std::size_t d);

}  // namespace hwenc
