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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hwenc/coordinates.h"
#include "hwenc/encoders.h"

namespace hwenc {

/// One entry per row: "re" in real mode, "re,im" in complex mode. Blank lines and
/// lines starting with '#' are skipped. Throws ParseError naming the row.
DataVector read_vector_csv(std::istream& in, Mode mode);
DataVector read_vector_csv_file(const std::string& path, Mode mode);

/// JSON array of {"bits": "0110", "re": 0.5, "im": 0.0}; "im" is optional and must be
/// zero in real mode.
SparseTuple parse_sparse_json(const std::string& text, Mode mode);
SparseTuple read_sparse_json_file(const std::string& path, Mode mode);

std::string read_text_file(const std::string& path);

/// "bitstring,value" rows. With a non-empty ordering the rows follow it (missing keys
/// print 0) and keys outside it come after in ascending order.
void write_values_csv(std::ostream& out, const std::map<BitString, double>& values,
                      const std::vector<BitString>& ordering = {});
void write_counts_csv(std::ostream& out, const std::map<BitString, long>& counts,
                      const std::vector<BitString>& ordering = {});

}  // namespace hwenc
