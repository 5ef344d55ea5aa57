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

// Batch processing: record -> 2D basis -> obtuse superbase -> invariants.
// Records are split into contiguous chunks, one per worker, and results are
// stored by input position, so output never depends on the thread count.

#ifndef ROOTFORM_PIPELINE_HPP_
#define ROOTFORM_PIPELINE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootform/grid.hpp"
#include "rootform/lattice.hpp"
#include "rootform/projection.hpp"
#include "rootform/records.hpp"

namespace rootform {

struct LatticeInvariants {
  RootForm root_form;
  OrientedRootForm oriented;
  QTPoint qt;  // signed_x from the oriented form
  int reduction_steps = 0;
};

struct RecordOutcome {
  std::optional<LatticeInvariants> invariants;
  std::string error;  // set when invariants is empty
};

/// Worker count from LATTICE_THREADS, else the hardware concurrency
/// (at least 1).
unsigned worker_count();

LatticeInvariants compute_invariants(const Basis2& b, const ReduceOptions& opt = {});

/// One outcome per record, in input order.
std::vector<RecordOutcome> process_records(std::span<const LatticeRecord> records,
                                           unsigned threads, const ReduceOptions& opt = {});

enum class GridMode {
  RootPair,  // (r01, r02)
  Qt,        // quotient triangle (x, y)
};

GridSpec default_grid_spec(GridMode mode);

/// Bins every successful outcome; failed ones are ignored.
DensityGrid grid_from_outcomes(std::span<const RecordOutcome> outcomes, GridMode mode,
                               const GridSpec& spec);

} // namespace rootform

#endif
