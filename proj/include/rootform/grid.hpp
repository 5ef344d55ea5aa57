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
#ifndef ROOTFORM_GRID_HPP_
#define ROOTFORM_GRID_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rootform {

struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int resolution = 200;

  /// Throws InvalidGridSpec.
  void validate() const;
};

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Square histogram of points. Bin (ix, iy) covers
/// [x_min + ix w, x_min + (ix + 1) w) and likewise in y; the upper bound
/// itself falls into the last bin. Points outside the bounds only bump
/// overflow().
class DensityGrid {
public:
  explicit DensityGrid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  int resolution() const { return spec_.resolution; }
  std::uint64_t count(int ix, int iy) const { return counts_[index(ix, iy)]; }
  std::uint64_t overflow() const { return overflow_; }
  std::uint64_t total() const;   // sum of bins, without overflow
  std::uint64_t max_count() const;

  void add(double x, double y);
  void merge(const DensityGrid& other);

private:
  std::size_t index(int ix, int iy) const;
  GridSpec spec_;
  std::vector<std::uint64_t> counts_;  // row-major, row = y bin
  std::uint64_t overflow_ = 0;
};

DensityGrid accumulate_grid(std::span<const GridPoint> points, const GridSpec& spec);

enum class GridFormat { Csv, Pgm };

/// csv: the line "x_min,x_max,y_min,y_max,resolution" (values), then one
/// line of counts per y bin, lowest y first.
/// pgm: binary P5, top row = largest y, maxval = min(65535, max count)
/// (at least 1), 8-bit samples when maxval < 256 and 16-bit big-endian
/// otherwise.
void emit_grid(const DensityGrid& grid, GridFormat format, std::ostream& out);
std::string emit_grid(const DensityGrid& grid, GridFormat format);

} // namespace rootform

#endif
