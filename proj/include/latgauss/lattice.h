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

#ifndef LATGAUSS_LATTICE_H_
#define LATGAUSS_LATTICE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace latgauss {

// Relative threshold on Gram-Schmidt norms below which a basis is treated
// as linearly dependent: ||b_i*|| < kRankTolerance * max_j ||b_j||.
inline constexpr double kRankTolerance = 1e-9;

// Default cap on the number of lattice points an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// A lattice given by r linearly independent row vectors in R^n.
//
// Construction validates independence and caches the covolume
// sqrt(det(B B^T)), computed as the product of Gram-Schmidt norms.
class LatticeBasis {
 public:
  // Throws Error(kRankDeficient) for dependent rows, Error(kDomainError) for
  // an empty or non-finite matrix.
  explicit LatticeBasis(Eigen::MatrixXd rows);

  static LatticeBasis Identity(int n);

  const Eigen::MatrixXd& vectors() const { return rows_; }
  int rank() const { return static_cast<int>(rows_.rows()); }
  int ambient_dim() const { return static_cast<int>(rows_.cols()); }
  bool full_rank() const { return rank() == ambient_dim(); }
  double det() const { return det_; }

  // sum_i coeffs[i] * b_i, accumulated in index order.
  Eigen::VectorXd Combine(const std::vector<std::int64_t>& coeffs) const;

 private:
  Eigen::MatrixXd rows_;
  double det_ = 0.0;
};

struct GramSchmidt {
  // Row i is b_i*.
  Eigen::MatrixXd orthogonal_vectors;
  // mu(i, j) = <b_i, b_j*> / ||b_j*||^2 for j < i; unit diagonal, zero above.
  Eigen::MatrixXd mu;
  // ||b_i*||^2.
  Eigen::VectorXd squared_norms;
};

// Plain Gram-Schmidt in the given basis order. Throws Error(kRankDeficient)
// if some ||b_i*|| falls below the rank tolerance.
GramSchmidt ComputeGramSchmidt(const LatticeBasis& basis);

// Basis D of L* with <b_i, d_j> = delta_ij. Requires a full-rank basis
// (Error(kNotFullRank) otherwise).
LatticeBasis DualBasis(const LatticeBasis& basis);

struct LatticePoint {
  std::vector<std::int64_t> coefficients;
  Eigen::VectorXd vector;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// Rigorous upper bound on |L ∩ closed_ball(c, radius)| for any center c:
// vol_r(radius + rho) / det(L) with rho the half-diagonal of the
// Gram-Schmidt box.
double PredictedPointCount(const LatticeBasis& basis, double radius);

// All v in L with ||v - center|| <= radius (the distance as computed in
// double, summing coordinates in index order), each reported once, sorted by
// ||v|| and then lexicographically by coordinates. Depth-first search over
// coefficients pruned with Gram-Schmidt norms.
std::vector<LatticePoint> EnumerateInBall(
    const LatticeBasis& basis, const Eigen::VectorXd& center, double radius,
    const EnumerationOptions& options = {});

// Callback form used by the mass routines: visits every v with
// ||v - center||^2 <= squared_radius in unspecified order, passing the
// coefficient vector and the coordinates of v.
using PointVisitor = std::function<void(const std::vector<std::int64_t>&,
                                        const Eigen::VectorXd&)>;
void VisitPointsInBall(const LatticeBasis& basis,
                       const Eigen::VectorXd& center, double squared_radius,
                       const PointVisitor& visit,
                       const EnumerationOptions& options = {});

struct SuccessiveMinima {
  std::vector<double> values;
  // A lattice vector realizing each minimum; the list is linearly independent.
  std::vector<LatticePoint> witnesses;
};

SuccessiveMinima ComputeSuccessiveMinima(
    const LatticeBasis& basis, const EnumerationOptions& options = {});

struct ClosestVector {
  double distance = 0.0;
  LatticePoint closest;
};

// Exact closest vector by enumeration around x, seeded with the Babai
// nearest-plane radius. Requires a full-rank basis.
ClosestVector DistToLattice(const LatticeBasis& basis, const Eigen::VectorXd& x,
                            const EnumerationOptions& options = {});

}  // namespace latgauss

#endif  // LATGAUSS_LATTICE_H_
