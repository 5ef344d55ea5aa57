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
#include "rootform/records.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>

#include "rootform/format.hpp"

namespace rootform {

namespace {

constexpr double kAngleTol = 1e-9;  // degrees

std::size_t arity(RecordKind k) {
  switch (k) {
    case RecordKind::Basis: return 4;
    case RecordKind::Cell2: return 3;
    case RecordKind::Ortho3: return 3;
    case RecordKind::Mono3: return 4;
  }
  return 0;
}

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos)
      return out;
    s.remove_prefix(comma + 1);
  }
}

void check_length(double v, const char* name, std::size_t line) {
  if (!(v > 0.0))
    throw ParseError(line, std::string("nonpositive length ") + name);
}

void check_angle(double v, const char* name, std::size_t line) {
  if (!(v > 0.0 && v < 180.0))
    throw ParseError(line, std::string("bad angle ") + name + " (must be in (0, 180) degrees)");
}

Vec2 at_angle(double len, double degrees) {
  if (std::abs(degrees) < kAngleTol || std::abs(degrees - 180.0) < kAngleTol)
    fail(ErrorKind::DegenerateBasis, "cell angle too close to 0 or 180 degrees");
  if (degrees == 90.0)
    return {0.0, len};  // cos(pi / 2) is not exactly 0 in floating point
  const double rad = degrees * std::numbers::pi / 180.0;
  return {len * std::cos(rad), len * std::sin(rad)};
}

template <class F>
void read_lines(std::istream& in, F&& on_line) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text))
    on_line(text, ++line);
}

} // namespace

std::string_view to_string(RecordKind k) {
  switch (k) {
    case RecordKind::Basis: return "basis";
    case RecordKind::Cell2: return "cell2";
    case RecordKind::Ortho3: return "ortho3";
    case RecordKind::Mono3: return "mono3";
  }
  return "basis";
}

bool parse_record_line(std::string_view text, std::size_t line, LatticeRecord& out) {
  text = trim(text.substr(0, text.find('#')));
  if (text.empty())
    return false;
  const std::vector<std::string_view> f = split_fields(text);
  if (f.size() < 2)
    throw ParseError(line, "expected id,kind,params...");
  if (f[0].empty())
    throw ParseError(line, "empty id");

  RecordKind kind;
  if (f[1] == "basis") kind = RecordKind::Basis;
  else if (f[1] == "cell2") kind = RecordKind::Cell2;
  else if (f[1] == "ortho3") kind = RecordKind::Ortho3;
  else if (f[1] == "mono3") kind = RecordKind::Mono3;
  else throw ParseError(line, "unknown kind '" + std::string(f[1]) + "'");

  const std::size_t n = f.size() - 2;
  if (n != arity(kind))
    throw ParseError(line, "wrong arity: " + std::string(to_string(kind)) + " takes " +
                               std::to_string(arity(kind)) + " parameters, got " +
                               std::to_string(n));
  std::vector<double> params;
  params.reserve(n);
  for (std::size_t i = 2; i < f.size(); ++i) {
    double v = 0.0;
    if (!parse_double(f[i], v) || !std::isfinite(v))
      throw ParseError(line, "bad number '" + std::string(f[i]) + "'");
    params.push_back(v);
  }

  switch (kind) {
    case RecordKind::Basis:
      break;
    case RecordKind::Cell2:
      check_length(params[0], "a", line);
      check_length(params[1], "b", line);
      check_angle(params[2], "gamma", line);
      break;
    case RecordKind::Ortho3:
      check_length(params[0], "a", line);
      check_length(params[1], "b", line);
      check_length(params[2], "c", line);
      break;
    case RecordKind::Mono3:
      check_length(params[0], "a", line);
      check_length(params[1], "b", line);
      check_length(params[2], "c", line);
      check_angle(params[3], "beta", line);
      break;
  }
  out = LatticeRecord{std::string(f[0]), kind, std::move(params), line};
  return true;
}

std::vector<LatticeRecord> parse_records(std::istream& in) {
  std::vector<LatticeRecord> out;
  read_lines(in, [&](const std::string& text, std::size_t line) {
    LatticeRecord rec;
    if (parse_record_line(text, line, rec))
      out.push_back(std::move(rec));
  });
  return out;
}

ParseOutcome parse_records_lenient(std::istream& in) {
  ParseOutcome out;
  read_lines(in, [&](const std::string& text, std::size_t line) {
    LatticeRecord rec;
    try {
      if (parse_record_line(text, line, rec))
        out.records.push_back(std::move(rec));
    } catch (const ParseError& e) {
      out.skipped.push_back(e);
    }
  });
  return out;
}

Basis2 project_to_2d(const LatticeRecord& rec) {
  const std::vector<double>& p = rec.params;
  if (p.size() != arity(rec.kind))
    fail(ErrorKind::InvalidArgument, "record '" + rec.id + "' has the wrong parameter count");
  switch (rec.kind) {
    case RecordKind::Basis:
      return Basis2::make({p[0], p[1]}, {p[2], p[3]});
    case RecordKind::Cell2:
      return Basis2::make({p[0], 0.0}, at_angle(p[1], p[2]));
    case RecordKind::Ortho3: {
      std::array<double, 3> s{p[0], p[1], p[2]};
      std::sort(s.begin(), s.end());
      return Basis2::make({s[0], 0.0}, {0.0, s[1]});
    }
    case RecordKind::Mono3:
      return Basis2::make({p[0], 0.0}, at_angle(p[2], p[3]));
  }
  fail(ErrorKind::InvalidArgument, "unknown record kind");
}

} // namespace rootform
