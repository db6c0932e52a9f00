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

#include "hwenc/bitstring.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hwenc/error.h"

namespace hwenc {

namespace {

std::uint64_t low_mask(int n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

void check_size(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidArgument("bitstring length must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                              std::to_string(n));
    }
}

}  // namespace

BitString::BitString(int n, std::uint64_t word) : n_(n), word_(word) {
    check_size(n);
    if (word & ~low_mask(n)) throw InvalidArgument("word has bits beyond length " + std::to_string(n));
}

BitString BitString::parse(std::string_view text) {
    check_size(static_cast<int>(text.size()));
    std::uint64_t w = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("bitstring '" + std::string(text) + "' contains '" + c + "'");
        w = (w << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(static_cast<int>(text.size()), w);
}

BitString BitString::from_labels(int n, const QubitSet& ones) {
    check_size(n);
    for (int q : ones) {
        if (q < 1 || q > n) throw InvalidArgument("qubit label " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
    return BitString(n, label_mask(ones));
}

BitString BitString::leading_ones(int n, int k) {
    check_size(n);
    if (k < 0 || k > n) throw InvalidArgument("weight out of range");
    return BitString(n, low_mask(n) & ~low_mask(n - k));
}

BitString BitString::trailing_ones(int n, int k) {
    check_size(n);
    if (k < 0 || k > n) throw InvalidArgument("weight out of range");
    return BitString(n, low_mask(k));
}

int BitString::hamming_weight() const { return std::popcount(word_); }

bool BitString::at_label(int q) const {
    if (q < 1 || q > n_) throw InvalidArgument("qubit label " + std::to_string(q) + " out of range");
    return (word_ >> (q - 1)) & 1ULL;
}

void BitString::set_label(int q, bool value) {
    if (q < 1 || q > n_) throw InvalidArgument("qubit label " + std::to_string(q) + " out of range");
    const std::uint64_t bit = 1ULL << (q - 1);
    word_ = value ? (word_ | bit) : (word_ & ~bit);
}

QubitSet BitString::ones() const {
    QubitSet out;
    for (int q = 1; q <= n_; ++q)
        if (at_label(q)) out.insert(q);
    return out;
}

QubitSet BitString::zeros() const { return complement().ones(); }

BitString BitString::complement() const { return BitString(n_, ~word_ & low_mask(n_)); }

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int p = 1; p <= n_; ++p) s[p - 1] = at_position(p) ? '1' : '0';
    return s;
}

std::uint64_t label_mask(const QubitSet& labels) {
    std::uint64_t m = 0;
    for (int q : labels) m |= 1ULL << (q - 1);
    return m;
}

// With k = 0 or k = n the weight class has a single member, so nothing is marked.
EhrlichState EhrlichState::ones_marked(int n, int k) {
    EhrlichState s{BitString::leading_ones(n, k), {}};
    if (k < n)
        for (int p = 1; p <= k; ++p) s.marked.insert(p);
    return s;
}

EhrlichState EhrlichState::zeros_marked(int n, int k) {
    EhrlichState s{BitString::trailing_ones(n, k), {}};
    if (k > 0)
        for (int p = 1; p <= n - k; ++p) s.marked.insert(p);
    return s;
}

EhrlichState next_bitstring(const EhrlichState& state) {
    if (state.marked.empty()) throw SequenceExhausted("sequence exhausted: no marked positions left");
    const BitString& b = state.bits;
    const int n = b.size();
    const int m = *state.marked.rbegin();
    if (m < 1 || m > n) throw MalformedState("marked position " + std::to_string(m) + " out of range");

    int partner = 0;
    if (!b.at_position(m)) {
        for (int p = m + 1; p <= n; ++p) {
            if (b.at_position(p)) {
                partner = p;
                break;
            }
        }
    } else {
        for (int p = m + 1; p <= n && !b.at_position(p); ++p) partner = p;
    }
    if (partner == 0) {
        throw MalformedState("no swap partner for pivot position " + std::to_string(m) + " in " + b.to_string());
    }

    EhrlichState next = state;
    const bool pivot = b.at_position(m);
    next.bits.set_position(m, b.at_position(partner));
    next.bits.set_position(partner, pivot);
    next.marked.erase(m);

    // start of the maximal constant suffix
    int j = n;
    while (j > 1 && next.bits.at_position(j - 1) == next.bits.at_position(n)) --j;
    for (int p = m + 1; p < j; ++p) next.marked.insert(p);
    return next;
}

std::vector<BitString> ehrlich_sequence(const EhrlichState& start, std::size_t count) {
    std::vector<BitString> out;
    if (count == 0) return out;
    out.reserve(count);
    EhrlichState s = start;
    out.push_back(s.bits);
    while (out.size() < count) {
        if (s.marked.empty()) {
            throw SequenceExhausted("sequence exhausted after " + std::to_string(out.size()) + " of " +
                                    std::to_string(count) + " bitstrings");
        }
        s = next_bitstring(s);
        out.push_back(s.bits);
    }
    return out;
}

std::vector<BitString> ehrlich_full_sequence(const EhrlichState& start) {
    std::vector<BitString> out{start.bits};
    EhrlichState s = start;
    while (!s.marked.empty()) {
        s = next_bitstring(s);
        out.push_back(s.bits);
    }
    return out;
}

GateParams gate_params(const BitString& b, const BitString& b_next, const QubitSet& untouched) {
    if (b.size() != b_next.size()) throw InvalidArgument("bitstrings differ in length");
    if (b == b_next) throw InvalidArgument("gate_params needs two distinct bitstrings, got " + b.to_string() + " twice");
    const QubitSet ones_a = b.ones();
    const QubitSet ones_b = b_next.ones();
    GateParams g;
    std::set_intersection(ones_a.begin(), ones_a.end(), ones_b.begin(), ones_b.end(),
                          std::inserter(g.ctrls, g.ctrls.end()));
    std::set_difference(ones_a.begin(), ones_a.end(), g.ctrls.begin(), g.ctrls.end(),
                        std::inserter(g.ins, g.ins.end()));
    std::set_difference(ones_b.begin(), ones_b.end(), g.ctrls.begin(), g.ctrls.end(),
                        std::inserter(g.outs, g.outs.end()));
    g.untouched = untouched;
    for (int q : g.ins) g.untouched.erase(q);
    for (int q : g.outs) g.untouched.erase(q);
    for (int q : g.untouched) g.ctrls.erase(q);
    return g;
}

std::string format_labels(const QubitSet& labels) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int q : labels) {
        if (!first) os << ',';
        os << q;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace hwenc
