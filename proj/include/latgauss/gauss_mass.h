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

#ifndef LATGAUSS_GAUSS_MASS_H_
#define LATGAUSS_GAUSS_MASS_H_

#include <cstdint>

#include <Eigen/Dense>

#include "latgauss/lattice.h"

namespace latgauss {

// Width s > 0 of rho_s(x) = exp(-pi ||x||^2 / s^2).
class GaussianParam {
 public:
  // Error(kDomainError) unless s is finite and positive.
  explicit GaussianParam(double s);
  double s() const { return s_; }

 private:
  double s_;
};

double RhoPoint(const GaussianParam& s, const Eigen::VectorXd& x);
// rho_s evaluated at a scalar norm r.
double RhoRadius(const GaussianParam& s, double r);
// -pi ||x||^2 / s^2; never underflows.
double RhoPointLog(const GaussianParam& s, const Eigen::VectorXd& x);

// A truncated Gaussian mass. The true mass lies in
// [value, value + tail_bound] up to floating-point rounding of the sum.
struct MassResult {
  double value = 0.0;
  double tail_bound = 0.0;
  double radius = 0.0;
  std::uint64_t points_used = 0;
};

struct ComplexMass {
  double real_part = 0.0;
  double imag_part = 0.0;
  double tail_bound = 0.0;
};

struct MassOptions {
  EnumerationOptions enumeration;
};

// rho_s(L + t), truncated at a radius whose omitted mass is certified to be
// below tol / 2 by the tail bound (c sqrt(e) e^{-c^2/2})^n rho_s(L), with
// rho_s(L) over-estimated by a coarse pass. t = 0 gives rho_s(L).
//
// Errors: kNotFullRank, kDimensionMismatch, kDomainError (tol <= 0),
// kBudgetExceeded from the coarse pass, kTolUnreachable if the certified
// radius needs more points than the budget allows.
MassResult CosetMass(const LatticeBasis& basis, const Eigen::VectorXd& t,
                     const GaussianParam& s, double tol,
                     const MassOptions& options = {});

// Mass of the points u of L + t with ||u|| >= threshold.
MassResult ExcludedMass(const LatticeBasis& basis, const Eigen::VectorXd& t,
                        const GaussianParam& s, double threshold, double tol,
                        const MassOptions& options = {});

struct PoissonCheck {
  // rho_s(L + t) by direct summation.
  MassResult lhs;
  // (s^n / det L) sum_{w in L*} e^{2 pi i <t, w>} rho_{1/s}(w).
  ComplexMass rhs;
  // |lhs.value - rhs.real_part|
  double agreement = 0.0;
};

PoissonCheck CheckPoisson(const LatticeBasis& basis, const Eigen::VectorXd& t,
                          const GaussianParam& s, double tol,
                          const MassOptions& options = {});

}  // namespace latgauss

#endif  // LATGAUSS_GAUSS_MASS_H_
