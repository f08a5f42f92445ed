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
#include <vector>

#include <gtest/gtest.h>

#include "latgauss/error.h"
#include "latgauss/verify.h"
#include "oracles.h"

namespace latgauss {
namespace {

using ::latgauss::testing::BruteForceBall;
using ::latgauss::testing::BruteForceDistance;
using ::latgauss::testing::BruteForceMinima;
using ::latgauss::testing::RandomIntegerBasis;
using ::latgauss::testing::RandomUnimodular;
using ::latgauss::testing::RandomVector;

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no latgauss::Error thrown";
  return ErrorCode::kParseError;
}

Eigen::MatrixXd Rows(std::initializer_list<std::initializer_list<double>> r) {
  Eigen::MatrixXd m(r.size(), r.begin()->size());
  int i = 0;
  for (const auto& row : r) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Test lattices with n <= 4 used by the property tests.
std::vector<LatticeBasis> PropertyLattices() {
  std::vector<LatticeBasis> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back(LatticeBasis::Identity(n));
    for (unsigned seed = 0; seed < 3; ++seed) {
      out.emplace_back(RandomIntegerBasis(n, 100 + seed));
      out.push_back(RandomLattice(n, seed, LatticeStyle::kUnimodularMix));
      out.push_back(RandomLattice(n, seed, LatticeStyle::kDiagonalScaled));
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> SortedCoefficients(
    const std::vector<LatticePoint>& points) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : points) out.push_back(p.coefficients);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(LatticeBasisTest, RejectsDependentRows) {
  EXPECT_EQ(CodeOf([] { LatticeBasis(Rows({{1, 2}, {2, 4}})); }),
            ErrorCode::kRankDeficient);
  EXPECT_EQ(CodeOf([] { LatticeBasis(Rows({{1, 0}, {0, 0}})); }),
            ErrorCode::kRankDeficient);
  EXPECT_EQ(CodeOf([] { LatticeBasis(Rows({{1, 0}, {0, 1}, {1, 1}})); }),
            ErrorCode::kRankDeficient);
}

TEST(LatticeBasisTest, RejectsEmptyAndNonFinite) {
  EXPECT_EQ(CodeOf([] { LatticeBasis(Eigen::MatrixXd(0, 0)); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(CodeOf([] { LatticeBasis(Rows({{1, NAN}, {0, 1}})); }),
            ErrorCode::kDomainError);
}

TEST(LatticeBasisTest, DeterminantOfRankDeficientEmbedding) {
  const LatticeBasis b(Rows({{3, 4, 0}}));
  EXPECT_EQ(b.rank(), 1);
  EXPECT_EQ(b.ambient_dim(), 3);
  EXPECT_FALSE(b.full_rank());
  EXPECT_NEAR(b.det(), 5.0, 1e-14);
}

TEST(GramSchmidtTest, IdentityIsAlreadyOrthogonal) {
  const GramSchmidt gs = ComputeGramSchmidt(LatticeBasis::Identity(3));
  EXPECT_TRUE(gs.orthogonal_vectors.isApprox(Eigen::MatrixXd::Identity(3, 3)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        EXPECT_EQ(gs.mu(i, j), 0.0);
      }
    }
  }
}

TEST(GramSchmidtTest, OneStepProjection) {
  const GramSchmidt gs = ComputeGramSchmidt(LatticeBasis(Rows({{1, 0}, {1, 1}})));
  EXPECT_DOUBLE_EQ(gs.orthogonal_vectors(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(gs.orthogonal_vectors(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(gs.orthogonal_vectors(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(gs.orthogonal_vectors(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(gs.mu(1, 0), 1.0);
}

TEST(GramSchmidtTest, RandomIntegerBasisInvariants) {
  const LatticeBasis b(RandomIntegerBasis(4, 7));
  const GramSchmidt gs = ComputeGramSchmidt(b);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) {
      const double dot =
          gs.orthogonal_vectors.row(i).dot(gs.orthogonal_vectors.row(j));
      EXPECT_LE(std::abs(dot), 1e-9 * gs.orthogonal_vectors.row(i).norm() *
                                   gs.orthogonal_vectors.row(j).norm());
    }
    // b_i = b_i* + sum_{j<i} mu_ij b_j*.
    Eigen::RowVectorXd rebuilt = gs.orthogonal_vectors.row(i);
    for (int j = 0; j < i; ++j) rebuilt += gs.mu(i, j) * gs.orthogonal_vectors.row(j);
    EXPECT_LE((rebuilt - b.vectors().row(i)).norm(), 1e-12);
  }
  double product = 1.0;
  for (int i = 0; i < 4; ++i) product *= std::sqrt(gs.squared_norms(i));
  const double det = std::abs(b.vectors().determinant());
  EXPECT_NEAR(product / det, 1.0, 1e-10);
  EXPECT_NEAR(b.det() / det, 1.0, 1e-10);
}

TEST(DualBasisTest, IdentityIsSelfDual) {
  const LatticeBasis d = DualBasis(LatticeBasis::Identity(3));
  EXPECT_TRUE(d.vectors().isApprox(Eigen::MatrixXd::Identity(3, 3)));
}

TEST(DualBasisTest, ScalingRule) {
  const LatticeBasis d =
      DualBasis(LatticeBasis(2.0 * Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_TRUE(d.vectors().isApprox(0.5 * Eigen::MatrixXd::Identity(2, 2)));
}

TEST(DualBasisTest, DoubleDualGeneratesSameLattice) {
  const Eigen::MatrixXd b = RandomUnimodular(3, 11);
  ASSERT_NEAR(std::abs(b.determinant()), 1.0, 1e-12);
  const LatticeBasis dd = DualBasis(DualBasis(LatticeBasis(b)));
  // Same lattice iff the change of basis is integral with determinant +-1.
  const Eigen::MatrixXd change = dd.vectors() * b.inverse();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(change(i, j), std::round(change(i, j)), 1e-9);
    }
  }
  EXPECT_NEAR(std::abs(change.determinant()), 1.0, 1e-9);
}

TEST(DualBasisTest, GramAndDeterminantProperty) {
  for (const LatticeBasis& b : PropertyLattices()) {
    const LatticeBasis d = DualBasis(b);
    const Eigen::MatrixXd gram = b.vectors() * d.vectors().transpose();
    const int n = b.rank();
    EXPECT_LE((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(),
              1e-10);
    EXPECT_NEAR(b.det() * d.det(), 1.0, 1e-10);
  }
}

TEST(DualBasisTest, RejectsNonFullRank) {
  EXPECT_EQ(CodeOf([] { DualBasis(LatticeBasis(Rows({{1, 0}}))); }),
            ErrorCode::kNotFullRank);
}

TEST(EnumerateTest, Z2RadiusOneAndAHalf) {
  const auto points = EnumerateInBall(LatticeBasis::Identity(2),
                                      Eigen::Vector2d::Zero(), 1.5);
  const std::vector<std::vector<double>> expected = {
      {0, 0}, {-1, 0}, {0, -1}, {0, 1}, {1, 0},
      {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  ASSERT_EQ(points.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(points[i].vector(0), expected[i][0]) << i;
    EXPECT_EQ(points[i].vector(1), expected[i][1]) << i;
  }
}

TEST(EnumerateTest, Z1ClosedBall) {
  const auto points = EnumerateInBall(LatticeBasis::Identity(1),
                                      Eigen::VectorXd::Zero(1), 2.0);
  std::vector<double> values;
  for (const auto& p : points) values.push_back(p.vector(0));
  EXPECT_EQ(values, (std::vector<double>{0, -1, 1, -2, 2}));
}

TEST(EnumerateTest, RandomBasisMatchesBoxOracle) {
  const LatticeBasis b(RandomIntegerBasis(3, 3));
  const double lambda1 = ComputeSuccessiveMinima(b).values[0];
  const Eigen::VectorXd center = RandomVector(3, 3, 2.0);
  const auto points = EnumerateInBall(b, center, 2.0 * lambda1);
  EXPECT_EQ(SortedCoefficients(points),
            BruteForceBall(b.vectors(), center, 2.0 * lambda1));
  EXPECT_FALSE(points.empty());
}

TEST(EnumerateTest, CompletenessProperty) {
  unsigned seed = 0;
  for (const LatticeBasis& b : PropertyLattices()) {
    for (double radius : {0.0, 0.7, 1.0, 2.5}) {
      const Eigen::VectorXd center =
          (seed % 3 == 0) ? Eigen::VectorXd::Zero(b.rank())
                          : RandomVector(b.rank(), seed, 3.0);
      ++seed;
      EXPECT_EQ(SortedCoefficients(EnumerateInBall(b, center, radius)),
                BruteForceBall(b.vectors(), center, radius))
          << "n=" << b.rank() << " radius=" << radius;
    }
  }
}

TEST(EnumerateTest, OutputIsSortedByNormThenLex) {
  const LatticeBasis b(RandomIntegerBasis(3, 21));
  const auto points = EnumerateInBall(b, RandomVector(3, 5, 1.0), 4.0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double a = points[i - 1].vector.squaredNorm();
    const double c = points[i].vector.squaredNorm();
    EXPECT_LE(a, c);
    if (a == c) {
      EXPECT_TRUE(std::lexicographical_compare(
          points[i - 1].vector.begin(), points[i - 1].vector.end(),
          points[i].vector.begin(), points[i].vector.end()));
    }
  }
}

TEST(EnumerateTest, BudgetExceeded) {
  EnumerationOptions opts;
  opts.budget = 10;
  EXPECT_EQ(CodeOf([&] {
              EnumerateInBall(LatticeBasis::Identity(3),
                              Eigen::VectorXd::Zero(3), 5.0, opts);
            }),
            ErrorCode::kBudgetExceeded);
}

TEST(EnumerateTest, DimensionMismatch) {
  EXPECT_EQ(CodeOf([] {
              EnumerateInBall(LatticeBasis::Identity(2),
                              Eigen::VectorXd::Zero(3), 1.0);
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(SuccessiveMinimaTest, IntegerLattice) {
  for (int n = 1; n <= 4; ++n) {
    const SuccessiveMinima m = ComputeSuccessiveMinima(LatticeBasis::Identity(n));
    ASSERT_EQ(static_cast<int>(m.values.size()), n);
    for (double v : m.values) EXPECT_DOUBLE_EQ(v, 1.0);
  }
}

TEST(SuccessiveMinimaTest, Diagonal) {
  const SuccessiveMinima m = ComputeSuccessiveMinima(
      LatticeBasis(Eigen::Vector3d(1, 2, 3).asDiagonal().toDenseMatrix()));
  ASSERT_EQ(m.values.size(), 3u);
  EXPECT_DOUBLE_EQ(m.values[0], 1.0);
  EXPECT_DOUBLE_EQ(m.values[1], 2.0);
  EXPECT_DOUBLE_EQ(m.values[2], 3.0);
}

TEST(SuccessiveMinimaTest, RandomBasisMatchesBruteForce) {
  const LatticeBasis b(RandomIntegerBasis(4, 5));
  const SuccessiveMinima m = ComputeSuccessiveMinima(b);
  const std::vector<double> oracle = BruteForceMinima(b.vectors());
  ASSERT_EQ(m.values.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_NEAR(m.values[i], oracle[i], 1e-12) << i;
  }
  // Witnesses are lattice vectors of the reported norms, independent.
  Eigen::MatrixXd w(4, 4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(m.witnesses[i].vector.norm(), m.values[i], 1e-12);
    w.row(i) = m.witnesses[i].vector.transpose();
  }
  EXPECT_GT(std::abs(w.determinant()), 0.5);
}

TEST(SuccessiveMinimaTest, AgreesWithBruteForceProperty) {
  for (const LatticeBasis& b : PropertyLattices()) {
    const SuccessiveMinima m = ComputeSuccessiveMinima(b);
    const std::vector<double> oracle = BruteForceMinima(b.vectors());
    ASSERT_EQ(m.values.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      EXPECT_NEAR(m.values[i], oracle[i], 1e-12);
    }
  }
}

TEST(SuccessiveMinimaTest, ShortestVectorProperty) {
  for (const LatticeBasis& b : PropertyLattices()) {
    const double lambda1 = ComputeSuccessiveMinima(b).values[0];
    const auto points =
        EnumerateInBall(b, Eigen::VectorXd::Zero(b.rank()), lambda1);
    bool found = false;
    for (const auto& p : points) {
      const double norm =
          std::sqrt(::latgauss::testing::SqDist(p.vector, 0 * p.vector));
      if (norm == 0.0) continue;
      EXPECT_GE(norm, lambda1);
      if (norm == lambda1) found = true;
    }
    EXPECT_TRUE(found);
  }
}

TEST(DistTest, CoordinatewiseRounding) {
  const ClosestVector cv =
      DistToLattice(LatticeBasis::Identity(2), Eigen::Vector2d(0.4, 0.7));
  EXPECT_NEAR(cv.distance, 0.5, 1e-15);
  EXPECT_EQ(cv.closest.vector(0), 0.0);
  EXPECT_EQ(cv.closest.vector(1), 1.0);
}

TEST(DistTest, LatticePointHasZeroDistance) {
  const LatticeBasis b(RandomIntegerBasis(3, 17));
  const Eigen::VectorXd v = b.Combine({2, -1, 3});
  const ClosestVector cv = DistToLattice(b, v);
  EXPECT_EQ(cv.distance, 0.0);
  EXPECT_EQ(cv.closest.vector, v);
}

TEST(DistTest, RandomBasisMatchesBruteForce) {
  const LatticeBasis b(RandomIntegerBasis(3, 9));
  const Eigen::VectorXd x = RandomVector(3, 9, 4.0);
  EXPECT_NEAR(DistToLattice(b, x).distance, BruteForceDistance(b.vectors(), x),
              1e-12);
}

TEST(DistTest, NoEnumeratedPointIsCloser) {
  unsigned seed = 40;
  for (const LatticeBasis& b : PropertyLattices()) {
    const Eigen::VectorXd x = RandomVector(b.rank(), seed++, 3.0);
    const double d = DistToLattice(b, x).distance;
    for (const auto& p : EnumerateInBall(b, x, 3.0)) {
      EXPECT_LE(d, std::sqrt(::latgauss::testing::SqDist(x, p.vector)));
    }
    EXPECT_NEAR(d, BruteForceDistance(b.vectors(), x), 1e-12);
  }
}

}  // namespace
}  // namespace latgauss
