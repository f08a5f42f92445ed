/*
 * Copyright 2026 The latgauss Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LATGAUSS_SWEEP_H_
#define LATGAUSS_SWEEP_H_

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "latgauss/gauss_mass.h"
#include "latgauss/lattice.h"

namespace latgauss {

// Exact CSV header of the bounds sweep.
inline constexpr std::string_view kSweepCsvHeader =
    "n,c,k,log2_classic,log2_epsilon,log2_improved,log2_improved_sandwich,"
    "log2_ratio_gain,log2_true_ratio";

struct SweepSpec {
  std::vector<int> n_values;
  double c_start = 1.0;
  double c_stop = 3.0;
  double c_step = 0.5;
  double k = 1.04;
  bool include_true_ratio = false;
  // Required when include_true_ratio; its dimension must equal every n.
  std::optional<LatticeBasis> lattice;
  // Gaussian width used for the measured ratio.
  double s = 1.0;
};

struct SweepRow {
  int n = 0;
  double c = 1.0;
  double k = 0.0;
  double log2_classic = 0.0;
  double log2_epsilon = 0.0;
  double log2_improved = 0.0;
  double log2_improved_sandwich = 0.0;
  double log2_ratio_gain = 0.0;
  // log2 of rho_s(L minus the ball of radius c tau) / rho_s(L), measured.
  std::optional<double> log2_true_ratio;
};

// c_start, c_start + step, ... up to c_stop inclusive (with 1e-9 slack).
std::vector<double> SweepCValues(const SweepSpec& spec);

// Error(kDomainError) when the spec violates its invariants: c_start >= 1,
// step > 0, k > 1, n >= 1, and for true ratios a lattice of dimension
// n <= 6 matching every n.
void ValidateSweepSpec(const SweepSpec& spec);

// One row per (n, c), n-major.
std::vector<SweepRow> BoundsSweep(const SweepSpec& spec,
                                  const MassOptions& options = {});

// Writes the header and one row per line (LF). Numbers use the given count
// of significant digits; absent true ratios are written as NA.
void WriteSweepCsv(const std::vector<SweepRow>& rows, int precision,
                   std::ostream& out);

}  // namespace latgauss

#endif  // LATGAUSS_SWEEP_H_
