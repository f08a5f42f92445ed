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

#include "latgauss/lattice.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "latgauss/error.h"
#include "vector_ops.h"

namespace latgauss {
namespace {

constexpr double kUnitRoundoff = 0x1p-53;

GramSchmidt GramSchmidtOfRows(const Eigen::MatrixXd& rows) {
  const Eigen::Index r = rows.rows();
  const Eigen::Index n = rows.cols();
  GramSchmidt gs;
  gs.orthogonal_vectors = Eigen::MatrixXd::Zero(r, n);
  gs.mu = Eigen::MatrixXd::Identity(r, r);
  gs.squared_norms = Eigen::VectorXd::Zero(r);

  double max_norm = 0.0;
  for (Eigen::Index i = 0; i < r; ++i) {
    max_norm = std::max(max_norm, rows.row(i).norm());
  }
  for (Eigen::Index i = 0; i < r; ++i) {
    Eigen::RowVectorXd v = rows.row(i);
    for (Eigen::Index j = 0; j < i; ++j) {
      const double mu = v.dot(gs.orthogonal_vectors.row(j)) / gs.squared_norms(j);
      gs.mu(i, j) = mu;
      v -= mu * gs.orthogonal_vectors.row(j);
    }
    const double norm = v.norm();
    if (!(norm >= kRankTolerance * max_norm) || norm == 0.0) {
      throw Error(ErrorCode::kRankDeficient,
                  "basis vector " + std::to_string(i) +
                      " is numerically dependent on the previous ones");
    }
    gs.orthogonal_vectors.row(i) = v;
    gs.squared_norms(i) = norm * norm;
  }
  return gs;
}

// Fraction-free row echelon form over the integers, used to track the rank
// of coefficient vectors exactly.
class IntegerSpan {
 public:
  // Returns true and records v if it is independent of the stored rows.
  bool AddIfIndependent(std::vector<std::int64_t> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const __int128 a = row[pivot];
      const __int128 b = v[pivot];
      std::vector<__int128> wide(v.size());
      __int128 g = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        wide[i] = a * v[i] - b * row[i];
        g = Gcd(g, wide[i]);
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = static_cast<std::int64_t>(g == 0 ? 0 : wide[i] / g);
      }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        rows_.emplace_back(i, std::move(v));
        return true;
      }
    }
    return false;
  }

 private:
  static __int128 Gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> rows_;
};

bool NormThenLex(const LatticePoint& a, const LatticePoint& b) {
  const double na = internal::SquaredNorm(a.vector);
  const double nb = internal::SquaredNorm(b.vector);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.vector.begin(), a.vector.end(),
                                      b.vector.begin(), b.vector.end());
}

void CheckCenter(const LatticeBasis& basis, const Eigen::VectorXd& center) {
  if (center.size() != basis.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has dimension " + std::to_string(center.size()) +
                    " but the lattice lives in dimension " +
                    std::to_string(basis.ambient_dim()));
  }
}

}  // namespace

LatticeBasis::LatticeBasis(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.cols() == 0) {
    throw Error(ErrorCode::kDomainError, "basis must be non-empty");
  }
  if (!rows_.allFinite()) {
    throw Error(ErrorCode::kDomainError, "basis entries must be finite");
  }
  if (rows_.rows() > rows_.cols()) {
    throw Error(ErrorCode::kRankDeficient,
                "more basis vectors than the ambient dimension");
  }
  const GramSchmidt gs = GramSchmidtOfRows(rows_);
  det_ = 1.0;
  for (Eigen::Index i = 0; i < gs.squared_norms.size(); ++i) {
    det_ *= std::sqrt(gs.squared_norms(i));
  }
}

LatticeBasis LatticeBasis::Identity(int n) {
  return LatticeBasis(Eigen::MatrixXd::Identity(n, n));
}

Eigen::VectorXd LatticeBasis::Combine(
    const std::vector<std::int64_t>& coeffs) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ambient_dim());
  for (int i = 0; i < rank(); ++i) {
    if (coeffs[i] == 0) continue;
    const double c = static_cast<double>(coeffs[i]);
    for (int j = 0; j < ambient_dim(); ++j) v(j) += c * rows_(i, j);
  }
  return v;
}

GramSchmidt ComputeGramSchmidt(const LatticeBasis& basis) {
  return GramSchmidtOfRows(basis.vectors());
}

LatticeBasis DualBasis(const LatticeBasis& basis) {
  if (!basis.full_rank()) {
    throw Error(ErrorCode::kNotFullRank,
                "dual basis requires a full-rank lattice");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis.vectors());
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kRankDeficient, "basis matrix is singular");
  }
  return LatticeBasis(lu.inverse().transpose());
}

double PredictedPointCount(const LatticeBasis& basis, double radius) {
  const GramSchmidt gs = ComputeGramSchmidt(basis);
  const double r = basis.rank();
  const double rho = 0.5 * std::sqrt(gs.squared_norms.sum());
  const double log_volume = 0.5 * r * std::log(std::numbers::pi) +
                            r * std::log(radius + rho) -
                            std::lgamma(0.5 * r + 1.0);
  return std::exp(log_volume - std::log(basis.det()));
}

void VisitPointsInBall(const LatticeBasis& basis, const Eigen::VectorXd& center,
                       double squared_radius, const PointVisitor& visit,
                       const EnumerationOptions& options) {
  CheckCenter(basis, center);
  if (!(squared_radius >= 0.0) || !std::isfinite(squared_radius)) {
    throw Error(ErrorCode::kDomainError, "radius must be finite and >= 0");
  }
  const double predicted =
      PredictedPointCount(basis, std::sqrt(squared_radius));
  if (predicted > static_cast<double>(options.budget)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration would visit up to " + std::to_string(predicted) +
                    " points, budget is " + std::to_string(options.budget));
  }

  const GramSchmidt gs = ComputeGramSchmidt(basis);
  const int r = basis.rank();

  // Coordinates of the center along each b_i* and its squared distance to
  // span(L).
  std::vector<double> projection(r);
  Eigen::VectorXd residual = center;
  for (int i = 0; i < r; ++i) {
    projection[i] =
        center.dot(gs.orthogonal_vectors.row(i).transpose()) /
        gs.squared_norms(i);
    residual -= projection[i] * gs.orthogonal_vectors.row(i).transpose();
  }
  const double budget_sq = squared_radius - internal::SquaredNorm(residual);
  // Pruning is loosened by this slack; the final membership test is exact.
  const double slack = 1e-9 * (squared_radius + gs.squared_norms.maxCoeff());
  if (budget_sq + slack < 0.0) return;

  const std::uint64_t node_cap =
      options.budget > UINT64_MAX / 16 ? UINT64_MAX : options.budget * 16;
  std::uint64_t nodes = 0;
  std::vector<std::int64_t> coeffs(r, 0);

  auto descend = [&](auto&& self, int level, double partial) -> void {
    double center_coord = projection[level];
    for (int j = level + 1; j < r; ++j) {
      center_coord -= static_cast<double>(coeffs[j]) * gs.mu(j, level);
    }
    const double remaining = budget_sq - partial + slack;
    if (remaining < 0.0) return;
    const double half_width = std::sqrt(remaining / gs.squared_norms(level));
    const auto lo =
        static_cast<std::int64_t>(std::ceil(center_coord - half_width - 1e-9));
    const auto hi =
        static_cast<std::int64_t>(std::floor(center_coord + half_width + 1e-9));
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (++nodes > node_cap) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "enumeration tree exceeded the node budget");
      }
      const double diff = static_cast<double>(x) - center_coord;
      const double next = partial + diff * diff * gs.squared_norms(level);
      if (next > budget_sq + slack) continue;
      coeffs[level] = x;
      if (level == 0) {
        const Eigen::VectorXd v = basis.Combine(coeffs);
        if (internal::SquaredDistance(v, center) <= squared_radius) {
          visit(coeffs, v);
        }
      } else {
        self(self, level - 1, next);
      }
    }
    coeffs[level] = 0;
  };
  descend(descend, r - 1, 0.0);
}

std::vector<LatticePoint> EnumerateInBall(const LatticeBasis& basis,
                                          const Eigen::VectorXd& center,
                                          double radius,
                                          const EnumerationOptions& options) {
  if (!(radius >= 0.0)) {
    throw Error(ErrorCode::kDomainError, "radius must be >= 0");
  }
  // Membership is decided on the computed distance, so a vector of norm
  // exactly `radius` is kept even when radius^2 rounds below its squared
  // norm.
  std::vector<LatticePoint> points;
  VisitPointsInBall(
      basis, center, radius * radius * (1.0 + 8.0 * kUnitRoundoff),
      [&](const std::vector<std::int64_t>& coeffs, const Eigen::VectorXd& v) {
        if (std::sqrt(internal::SquaredDistance(v, center)) <= radius) {
          points.push_back({coeffs, v});
        }
      },
      options);
  std::sort(points.begin(), points.end(), NormThenLex);
  return points;
}

SuccessiveMinima ComputeSuccessiveMinima(const LatticeBasis& basis,
                                         const EnumerationOptions& options) {
  if (!basis.full_rank()) {
    throw Error(ErrorCode::kNotFullRank,
                "successive minima require a full-rank lattice");
  }
  const int r = basis.rank();
  // lambda_i never exceeds the i-th shortest basis vector.
  std::vector<double> basis_sq(r);
  for (int i = 0; i < r; ++i) {
    basis_sq[i] = internal::SquaredNorm(basis.vectors().row(i).transpose());
  }
  std::sort(basis_sq.begin(), basis_sq.end());

  SuccessiveMinima minima;
  int found = 0;
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(basis.ambient_dim());
  while (found < r) {
    std::vector<LatticePoint> points;
    VisitPointsInBall(
        basis, origin, basis_sq[found],
        [&](const std::vector<std::int64_t>& coeffs, const Eigen::VectorXd& v) {
          points.push_back({coeffs, v});
        },
        options);
    std::sort(points.begin(), points.end(), NormThenLex);

    minima = {};
    IntegerSpan span;
    for (const LatticePoint& p : points) {
      if (std::all_of(p.coefficients.begin(), p.coefficients.end(),
                      [](std::int64_t c) { return c == 0; })) {
        continue;
      }
      if (span.AddIfIndependent(p.coefficients)) {
        minima.values.push_back(std::sqrt(internal::SquaredNorm(p.vector)));
        minima.witnesses.push_back(p);
        if (static_cast<int>(minima.values.size()) == r) break;
      }
    }
    found = static_cast<int>(minima.values.size());
  }
  return minima;
}

ClosestVector DistToLattice(const LatticeBasis& basis, const Eigen::VectorXd& x,
                            const EnumerationOptions& options) {
  if (!basis.full_rank()) {
    throw Error(ErrorCode::kNotFullRank,
                "distance computation requires a full-rank lattice");
  }
  CheckCenter(basis, x);
  const GramSchmidt gs = ComputeGramSchmidt(basis);
  const int r = basis.rank();

  // Nearest-plane rounding gives a lattice point whose distance seeds the
  // exact search radius.
  std::vector<std::int64_t> babai(r, 0);
  std::vector<double> projection(r);
  for (int i = 0; i < r; ++i) {
    projection[i] = x.dot(gs.orthogonal_vectors.row(i).transpose()) /
                    gs.squared_norms(i);
  }
  for (int i = r - 1; i >= 0; --i) {
    double c = projection[i];
    for (int j = i + 1; j < r; ++j) c -= static_cast<double>(babai[j]) * gs.mu(j, i);
    babai[i] = static_cast<std::int64_t>(std::llround(c));
  }
  const double seed_sq = internal::SquaredDistance(basis.Combine(babai), x);

  std::vector<std::pair<double, LatticePoint>> candidates;
  VisitPointsInBall(
      basis, x, seed_sq,
      [&](const std::vector<std::int64_t>& coeffs, const Eigen::VectorXd& v) {
        candidates.emplace_back(internal::SquaredDistance(v, x),
                                LatticePoint{coeffs, v});
      },
      options);
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return NormThenLex(a.second, b.second);
            });
  // The Babai point itself is always inside the seeded ball.
  return {std::sqrt(candidates.front().first),
          std::move(candidates.front().second)};
}

}  // namespace latgauss
