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

// Locale-independent number text.

#ifndef ROOTFORM_FORMAT_HPP_
#define ROOTFORM_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace rootform {

/// 12 significant digits, '.' separator, shortest of fixed/scientific.
std::string format_number(double v);

/// Whole string must be a number.
bool parse_double(std::string_view text, double& out);

/// Comma-separated numbers; throws InvalidArgument on malformed input or a
/// count different from `expected` (when nonzero).
std::vector<double> parse_number_list(std::string_view text, std::size_t expected = 0);

} // namespace rootform

#endif
