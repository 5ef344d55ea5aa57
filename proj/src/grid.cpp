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
#include "rootform/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rootform/errors.hpp"
#include "rootform/format.hpp"

namespace rootform {

namespace {

// Bin of v in [lo, hi]; -1 when outside.
int bin_of(double v, double lo, double hi, int res) {
  if (!(v >= lo && v <= hi))
    return -1;
  const int i = static_cast<int>(std::floor((v - lo) / (hi - lo) * res));
  return std::min(i, res - 1);
}

} // namespace

void GridSpec::validate() const {
  if (resolution < 1)
    fail(ErrorKind::InvalidGridSpec, "resolution must be at least 1");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
    fail(ErrorKind::InvalidGridSpec, "need finite x_min < x_max");
  if (!std::isfinite(y_min) || !std::isfinite(y_max) || !(y_max > y_min))
    fail(ErrorKind::InvalidGridSpec, "need finite y_min < y_max");
}

DensityGrid::DensityGrid(const GridSpec& spec) : spec_(spec) {
  spec_.validate();
  counts_.assign(static_cast<std::size_t>(spec.resolution) * spec.resolution, 0);
}

std::size_t DensityGrid::index(int ix, int iy) const {
  if (ix < 0 || iy < 0 || ix >= spec_.resolution || iy >= spec_.resolution)
    fail(ErrorKind::InvalidArgument, "bin index out of range");
  return static_cast<std::size_t>(iy) * spec_.resolution + ix;
}

std::uint64_t DensityGrid::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t DensityGrid::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

void DensityGrid::add(double x, double y) {
  const int ix = bin_of(x, spec_.x_min, spec_.x_max, spec_.resolution);
  const int iy = bin_of(y, spec_.y_min, spec_.y_max, spec_.resolution);
  if (ix < 0 || iy < 0)
    ++overflow_;
  else
    ++counts_[static_cast<std::size_t>(iy) * spec_.resolution + ix];
}

void DensityGrid::merge(const DensityGrid& other) {
  const GridSpec& o = other.spec_;
  if (o.resolution != spec_.resolution || o.x_min != spec_.x_min || o.x_max != spec_.x_max ||
      o.y_min != spec_.y_min || o.y_max != spec_.y_max)
    fail(ErrorKind::InvalidGridSpec, "cannot merge grids with different specs");
  for (std::size_t i = 0; i < counts_.size(); ++i)
    counts_[i] += other.counts_[i];
  overflow_ += other.overflow_;
}

DensityGrid accumulate_grid(std::span<const GridPoint> points, const GridSpec& spec) {
  DensityGrid g(spec);
  for (const GridPoint& p : points)
    g.add(p.x, p.y);
  return g;
}

void emit_grid(const DensityGrid& grid, GridFormat format, std::ostream& out) {
  const int res = grid.resolution();
  if (format == GridFormat::Csv) {
    const GridSpec& s = grid.spec();
    out << format_number(s.x_min) << ',' << format_number(s.x_max) << ','
        << format_number(s.y_min) << ',' << format_number(s.y_max) << ',' << res << '\n';
    for (int iy = 0; iy < res; ++iy) {
      for (int ix = 0; ix < res; ++ix) {
        if (ix) out << ',';
        out << grid.count(ix, iy);
      }
      out << '\n';
    }
    return;
  }

  const std::uint64_t peak = grid.max_count();
  const std::uint64_t maxval = std::clamp<std::uint64_t>(peak, 1, 65535);
  out << "P5\n" << res << ' ' << res << '\n' << maxval << '\n';
  for (int iy = res - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < res; ++ix) {
      std::uint64_t c = grid.count(ix, iy);
      if (peak > maxval)
        c = static_cast<std::uint64_t>(std::llround(static_cast<double>(c) * maxval / peak));
      if (maxval < 256) {
        out.put(static_cast<char>(c));
      } else {
        out.put(static_cast<char>((c >> 8) & 0xff));
        out.put(static_cast<char>(c & 0xff));
      }
    }
  }
}

std::string emit_grid(const DensityGrid& grid, GridFormat format) {
  std::ostringstream os;
  emit_grid(grid, format, os);
  return os.str();
}

} // namespace rootform
