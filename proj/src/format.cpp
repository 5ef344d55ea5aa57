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
#include "rootform/format.hpp"

#include <charconv>
#include <cmath>

#include "rootform/errors.hpp"

namespace rootform {

std::string format_number(double v) {
  if (v == 0.0)
    v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  if (text.empty())
    return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<double> parse_number_list(std::string_view text, std::size_t expected) {
  std::vector<double> out;
  for (;;) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double v = 0.0;
    if (!parse_double(field, v) || !std::isfinite(v))
      fail(ErrorKind::InvalidArgument, "bad number '" + std::string(field) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  if (expected != 0 && out.size() != expected)
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(expected) + " numbers, got " +
                                         std::to_string(out.size()));
  return out;
}

} // namespace rootform
