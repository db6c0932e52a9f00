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

#include "hwenc/data_io.h"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hwenc/error.h"
#include "json.hpp"

namespace hwenc {

namespace {

double parse_number(const std::string& field, int row) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw ParseError("row " + std::to_string(row) + ": not a number: '" + field + "'");
    }
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    if (used != field.size()) throw ParseError("row " + std::to_string(row) + ": trailing text in '" + field + "'");
    return v;
}

template <typename V>
void write_rows(std::ostream& out, const std::map<BitString, V>& values, const std::vector<BitString>& ordering) {
    const auto saved = out.precision(17);
    out << "bitstring,value\n";
    std::set<BitString> done;
    for (const BitString& b : ordering) {
        auto it = values.find(b);
        out << b.to_string() << ',' << (it == values.end() ? V{} : it->second) << '\n';
        done.insert(b);
    }
    for (const auto& [b, v] : values)
        if (!done.count(b)) out << b.to_string() << ',' << v << '\n';
    out.precision(saved);
}

}  // namespace

DataVector read_vector_csv(std::istream& in, Mode mode) {
    std::vector<Complex> entries;
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        const std::size_t want = mode == Mode::kReal ? 1 : 2;
        if (fields.size() != want)
            throw ParseError("row " + std::to_string(row) + ": expected " + std::to_string(want) + " column(s), got " +
                             std::to_string(fields.size()));
        const double re = parse_number(fields[0], row);
        const double im = want == 2 ? parse_number(fields[1], row) : 0.0;
        entries.emplace_back(re, im);
    }
    if (entries.empty()) throw ParseError("vector file has no rows");
    DataVector x;
    x.entries = std::move(entries);
    x.mode = mode;
    return x;
}

DataVector read_vector_csv_file(const std::string& path, Mode mode) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_vector_csv(in, mode);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SparseTuple parse_sparse_json(const std::string& text, Mode mode) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sparse input is not JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("sparse input must be a JSON array");
    SparseTuple y;
    y.mode = mode;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& e = doc[i];
        const std::string where = "entry " + std::to_string(i) + ": ";
        if (!e.is_object() || !e.contains("bits") || !e.contains("re") || !e["bits"].is_string() ||
            !e["re"].is_number())
            throw ParseError(where + "needs string \"bits\" and number \"re\"");
        double im = 0.0;
        if (e.contains("im")) {
            if (!e["im"].is_number()) throw ParseError(where + "\"im\" must be a number");
            im = e["im"].get<double>();
        }
        if (mode == Mode::kReal && im != 0.0) throw ParseError(where + "imaginary part in real mode");
        BitString b;
        try {
            b = BitString::parse(e["bits"].get<std::string>());
        } catch (const Error& err) {
            throw ParseError(where + err.what());
        }
        y.pairs.push_back({Complex(e["re"].get<double>(), im), b});
    }
    return y;
}

SparseTuple read_sparse_json_file(const std::string& path, Mode mode) { return parse_sparse_json(read_text_file(path), mode); }

void write_values_csv(std::ostream& out, const std::map<BitString, double>& values,
                      const std::vector<BitString>& ordering) {
    write_rows(out, values, ordering);
}

void write_counts_csv(std::ostream& out, const std::map<BitString, long>& counts,
                      const std::vector<BitString>& ordering) {
    write_rows(out, counts, ordering);
}

}  // namespace hwenc
