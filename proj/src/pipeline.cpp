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
#include "rootform/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "rootform/errors.hpp"

namespace rootform {

unsigned worker_count() {
  if (const char* env = std::getenv("LATTICE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1)
      return static_cast<unsigned>(std::min(n, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

LatticeInvariants compute_invariants(const Basis2& b, const ReduceOptions& opt) {
  const ObtuseSuperbase s = reduce_to_obtuse(b, opt);
  const OrientedRootForm oriented = oriented_root_form(s);
  return {root_form(s), oriented, to_quotient_triangle(oriented), s.reduction_steps()};
}

std::vector<RecordOutcome> process_records(std::span<const LatticeRecord> records,
                                           unsigned threads, const ReduceOptions& opt) {
  std::vector<RecordOutcome> out(records.size());
  const auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        out[i].invariants = compute_invariants(project_to_2d(records[i]), opt);
      } catch (const Error& e) {
        out[i].error = e.what();
      }
    }
  };

  const std::size_t n = records.size();
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    work(0, n);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work, n * w / workers, n * (w + 1) / workers);
  }
  return out;
}

GridSpec default_grid_spec(GridMode mode) {
  if (mode == GridMode::RootPair)
    return {0.0, 25.0, 0.0, 25.0, 200};
  return {0.0, 0.5, 0.0, 1.0 / 3.0, 200};
}

DensityGrid grid_from_outcomes(std::span<const RecordOutcome> outcomes, GridMode mode,
                               const GridSpec& spec) {
  DensityGrid g(spec);
  for (const RecordOutcome& o : outcomes) {
    if (!o.invariants)
      continue;
    if (mode == GridMode::RootPair)
      g.add(o.invariants->root_form.r01(), o.invariants->root_form.r02());
    else
      g.add(o.invariants->qt.x, o.invariants->qt.y);
  }
  return g;
}

} // namespace rootform
