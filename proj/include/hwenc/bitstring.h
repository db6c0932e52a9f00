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

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hwenc {

/// Set of qubit labels (1..n).
using QubitSet = std::set<int>;

constexpr int kMaxQubits = 63;

/// Fixed-length binary word with two coexisting index spaces.
///
/// String positions p = 1..n count left to right in the printed form. Qubit labels
/// q = 1..n are the gate-facing index: q = n - p + 1, so "110000" has ones on q6 and
/// q5. Internally label q is bit (q - 1) of `word()`, which makes the printed form the
/// ordinary big-endian binary representation of the word.
class BitString {
   public:
    BitString() = default;
    BitString(int n, std::uint64_t word);

    /// Parses a left-to-right string of '0'/'1' characters.
    static BitString parse(std::string_view text);
    static BitString from_labels(int n, const QubitSet& ones);
    /// 1^k 0^(n-k) in printed form.
    static BitString leading_ones(int n, int k);
    /// 0^(n-k) 1^k in printed form.
    static BitString trailing_ones(int n, int k);

    int size() const { return n_; }
    std::uint64_t word() const { return word_; }
    int hamming_weight() const;

    bool at_label(int q) const;
    bool at_position(int p) const { return at_label(label_of(p)); }
    void set_label(int q, bool value);
    void set_position(int p, bool value) { set_label(label_of(p), value); }

    int label_of(int position) const { return n_ - position + 1; }
    int position_of(int label) const { return n_ - label + 1; }

    /// Qubit labels holding a one (ascending).
    QubitSet ones() const;
    QubitSet zeros() const;
    BitString complement() const;
    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString& a, const BitString& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.word_ <=> b.word_;
    }

   private:
    int n_ = 0;
    std::uint64_t word_ = 0;
};

std::uint64_t label_mask(const QubitSet& labels);

/// Bitstring plus the marked string positions that drive the Ehrlich pivot rule.
struct EhrlichState {
    BitString bits;
    std::set<int> marked;  // string positions

    /// 1^k 0^(n-k) with the ones marked (no marks when k = n).
    static EhrlichState ones_marked(int n, int k);
    /// 0^(n-k) 1^k with the zeros marked (no marks when k = 0).
    static EhrlichState zeros_marked(int n, int k);

    friend bool operator==(const EhrlichState&, const EhrlichState&) = default;
};

/// One pivot swap of the Ehrlich generator.
///
/// The pivot is the rightmost marked position m. A zero pivot swaps with the nearest one
/// to its right; a one pivot swaps with the farthest zero to its right that is reachable
/// without crossing another one. The pivot is then unmarked and every position strictly
/// between m and the start of the final run of equal bits is marked.
///
/// Throws SequenceExhausted when nothing is marked and MalformedState when the pivot
/// has no partner.
EhrlichState next_bitstring(const EhrlichState& state);

/// `count` bitstrings of the Ehrlich order starting at `start.bits`.
std::vector<BitString> ehrlich_sequence(const EhrlichState& start, std::size_t count);

/// Runs the generator until it is exhausted.
std::vector<BitString> ehrlich_full_sequence(const EhrlichState& start);

/// Qubit-label sets for one controlled (g)RBS step between two bitstrings.
struct GateParams {
    QubitSet ins;
    QubitSet outs;
    QubitSet ctrls;
    QubitSet anti_ctrls;
    QubitSet untouched;

    friend bool operator==(const GateParams&, const GateParams&) = default;
};

/// Gate placement for mixing `b` into `b_next`.
///
/// ctrls = ones(b) & ones(b_next); ins/outs are the ones unique to b / b_next. The
/// untouched set is first reduced by ins|outs and then removed from ctrls; the reduced
/// set is returned for threading into the next step.
GateParams gate_params(const BitString& b, const BitString& b_next, const QubitSet& untouched);

std::string format_labels(const QubitSet& labels);

}  // namespace hwenc

template <>
struct std::hash<hwenc::BitString> {
    std::size_t operator()(const hwenc::BitString& b) const noexcept {
        return std::hash<std::uint64_t>{}(b.word() * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(b.size()));
    }
};
