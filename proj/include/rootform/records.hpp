/*
 * Copyright 2026 The rootform Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Lattice records, one per line:
//
//   id,basis,X1,Y1,X2,Y2      two basis vectors
//   id,cell2,a,b,gamma        2D cell, angle in degrees
//   id,ortho3,a,b,c           orthorhombic 3D cell
//   id,mono3,a,b,c,beta       monoclinic 3D cell, b the unique axis
//
// Fields are comma separated with optional surrounding blanks. Everything
// after '#' is a comment; blank lines are skipped.

#ifndef ROOTFORM_RECORDS_HPP_
#define ROOTFORM_RECORDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rootform/errors.hpp"
#include "rootform/vec2.hpp"

namespace rootform {

enum class RecordKind { Basis, Cell2, Ortho3, Mono3 };

std::string_view to_string(RecordKind k);

struct LatticeRecord {
  std::string id;
  RecordKind kind = RecordKind::Basis;
  std::vector<double> params;
  std::size_t line = 0;
};

/// Parses one non-comment line. Returns false for blank/comment lines.
/// Throws ParseError on malformed content.
bool parse_record_line(std::string_view text, std::size_t line, LatticeRecord& out);

/// Stops at the first malformed line.
std::vector<LatticeRecord> parse_records(std::istream& in);

struct ParseOutcome {
  std::vector<LatticeRecord> records;
  std::vector<ParseError> skipped;
};

/// Collects malformed lines instead of throwing.
ParseOutcome parse_records_lenient(std::istream& in);

/// 2D basis of a record: cells are laid out with the first side on +x;
/// ortho3 drops its longest side; mono3 is projected along the unique axis
/// b, giving the cell (a, c, beta).
Basis2 project_to_2d(const LatticeRecord& rec);

} // namespace rootform

#endif
