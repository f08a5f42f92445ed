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

#include "latgauss/sweep.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "latgauss/bounds.h"
#include "latgauss/error.h"

namespace latgauss {
namespace {

constexpr double kLn2 = std::numbers::ln2;

std::string FormatNumber(double value, int precision) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
  return buffer;
}

double MeasuredLog2Ratio(const LatticeBasis& basis, double s_value, double c,
                         const MassOptions& options) {
  const int n = basis.rank();
  const GaussianParam s(s_value);
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  const MassResult lattice = CosetMass(basis, origin, s, 1e-12, options);
  const double tau = s_value * std::sqrt(n / (2.0 * std::numbers::pi));
  const double bound = std::exp(ClassicBoundLog(c, n)) * lattice.value;
  const MassResult excluded = ExcludedMass(
      basis, origin, s, c * tau, std::clamp(1e-6 * bound, 1e-300, 1e-9),
      options);
  return std::log2(excluded.value / lattice.value);
}

}  // namespace

std::vector<double> SweepCValues(const SweepSpec& spec) {
  ValidateSweepSpec(spec);
  const auto count = static_cast<long>(
      std::floor((spec.c_stop - spec.c_start) / spec.c_step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long i = 0; i < count; ++i) {
    values.push_back(spec.c_start + static_cast<double>(i) * spec.c_step);
  }
  return values;
}

void ValidateSweepSpec(const SweepSpec& spec) {
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::kDomainError, message);
  };
  if (!(spec.c_start >= 1.0) || !std::isfinite(spec.c_start)) {
    fail("c range must start at or above 1");
  }
  if (!(spec.c_step > 0.0) || !std::isfinite(spec.c_step)) {
    fail("c step must be positive");
  }
  if (!(spec.c_stop >= spec.c_start) || !std::isfinite(spec.c_stop)) {
    fail("c range stop must be >= start");
  }
  if (!(spec.k > 1.0)) fail("k must exceed 1");
  if (spec.n_values.empty()) fail("at least one n is required");
  for (int n : spec.n_values) {
    if (n < 1) fail("n values must be positive");
  }
  if (spec.include_true_ratio) {
    if (!spec.lattice) fail("true ratios need a lattice");
    const int dim = spec.lattice->ambient_dim();
    if (!spec.lattice->full_rank()) fail("true ratios need a full-rank lattice");
    if (dim > 6) fail("true ratios are limited to n <= 6");
    for (int n : spec.n_values) {
      if (n != dim) {
        fail("n = " + std::to_string(n) +
             " does not match the lattice dimension " + std::to_string(dim));
      }
    }
    if (!(spec.s > 0.0)) fail("s must be positive");
  }
}

std::vector<SweepRow> BoundsSweep(const SweepSpec& spec,
                                  const MassOptions& options) {
  const std::vector<double> c_values = SweepCValues(spec);
  std::vector<SweepRow> rows;
  for (int n : spec.n_values) {
    const double epsilon_log = EpsilonLog(spec.k, n);
    for (double c : c_values) {
      SweepRow row;
      row.n = n;
      row.c = c;
      row.k = spec.k;
      row.log2_classic = ClassicBoundLog(c, n) / kLn2;
      row.log2_epsilon = epsilon_log / kLn2;
      row.log2_improved = ImprovedBoundLog(c, spec.k, n) / kLn2;
      row.log2_improved_sandwich =
          ImprovedSandwichLog(c, spec.k, n).log_value / kLn2;
      row.log2_ratio_gain = ImprovementRatioLog(c, n) / kLn2;
      if (spec.include_true_ratio) {
        row.log2_true_ratio = MeasuredLog2Ratio(*spec.lattice, spec.s, c, options);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, int precision,
                   std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << row.n << ',' << FormatNumber(row.c, precision) << ','
        << FormatNumber(row.k, precision) << ','
        << FormatNumber(row.log2_classic, precision) << ','
        << FormatNumber(row.log2_epsilon, precision) << ','
        << FormatNumber(row.log2_improved, precision) << ','
        << FormatNumber(row.log2_improved_sandwich, precision) << ','
        << FormatNumber(row.log2_ratio_gain, precision) << ','
        << (row.log2_true_ratio ? FormatNumber(*row.log2_true_ratio, precision)
                                : std::string("NA"))
        << '\n';
  }
}

}  // namespace latgauss
