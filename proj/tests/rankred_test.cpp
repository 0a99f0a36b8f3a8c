// Copyright 2026 The chandist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "chandist/rankred.hpp"
#include "chandist/random.hpp"
#include "support.hpp"

namespace chandist {
namespace {

using testing::max_abs_diff;
using testing::random_channel;
using testing::random_cp_map;

SuperOp trace_map(int n) {
  std::vector<ComplexMatrix> ops;
  for (int a = 0; a < n; ++a) {
    ComplexMatrix k = ComplexMatrix::Zero(1, n);
    k(0, a) = 1.0;
    ops.push_back(k);
  }
  return SuperOp(KrausRep::completely_positive(n, 1, ops));
}

// Keeps only the diagonal: every off-diagonal Hermitian lies in the kernel.
SuperOp pinching(int n) {
  std::vector<ComplexMatrix> ops;
  for (int a = 0; a < n; ++a) {
    ComplexMatrix k = ComplexMatrix::Zero(n, n);
    k(a, a) = 1.0;
    ops.push_back(k);
  }
  return SuperOp(KrausRep::completely_positive(n, n, ops));
}

ComplexMatrix diag(std::initializer_list<double> d) {
  RealVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

int numeric_rank(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > 1e-8 * s(0) ? 1 : 0;
  return r;
}

void expect_valid_density(const DensityMatrix& rho) {
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
  EXPECT_GE(eigh(rho.hermitian()).values.minCoeff(), -1e-10);
}

TEST(HermitianBasis, OrthonormalAndRoundtrips) {
  Rng rng = make_rng(60);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < n * n; ++i) {
      const ComplexMatrix ei = hermitian_basis_element(n, i);
      EXPECT_LT(hermiticity_defect(ei), 1e-15);
      for (int j = 0; j < n * n; ++j) {
        const double ip = (ei * hermitian_basis_element(n, j)).trace().real();
        EXPECT_NEAR(ip, i == j ? 1.0 : 0.0, 1e-14);
      }
    }
    const ComplexMatrix h = random_hermitian(n, rng);
    EXPECT_LT(max_abs_diff(from_hermitian_coordinates(hermitian_coordinates(h), n), h), 1e-14);
  }
  EXPECT_THROW(hermitian_basis_element(2, 4), DimensionError);
}

TEST(BuildPsi, IdentityChannelHasTrivialKernel) {
  const int n = 3;
  Rng rng = make_rng(61);
  const DensityMatrix rho = random_density(n, n, rng);
  const RealLinearMap psi = build_psi(identity_channel(n), rho.hermitian());
  EXPECT_EQ(psi.domain_dim, n * n);
  EXPECT_EQ(psi.codomain_dim, n * n + 1);
  EXPECT_EQ(numeric_rank(psi.matrix), n * n);
  EXPECT_FALSE(kernel_intersection(psi, rho).has_value());
}

TEST(BuildPsi, TraceMapKernelIsTraceless) {
  const int n = 3;
  ComplexMatrix one(1, 1);
  one(0, 0) = 1.0;
  const RealLinearMap psi = build_psi(trace_map(n), HermitianMatrix(one));
  EXPECT_EQ(psi.codomain_dim, 2);
  EXPECT_EQ(psi.domain_dim - numeric_rank(psi.matrix), n * n - 1);
}

TEST(BuildPsi, PreimageMapsToTarget) {
  Rng rng = make_rng(62);
  for (int t = 0; t < 5; ++t) {
    const SuperOp phi = random_cp_map(3, 3, 1 + t % 2, rng);
    const DensityMatrix rho = random_density(3, 2, rng);
    const ComplexMatrix p = chandist::apply(phi, rho.matrix());
    const RealLinearMap psi = build_psi(phi, HermitianMatrix(p));
    const int k = static_cast<int>(psi.range_basis.cols());
    const RealVector image = psi(rho.matrix());
    const ComplexMatrix inner = psi.range_basis.adjoint() * p * psi.range_basis;
    EXPECT_LT((image.head(k * k) - hermitian_coordinates(inner)).norm(), 1e-9);
    EXPECT_LT(std::abs(image(k * k)), 1e-9);
  }
}

TEST(BuildPsi, RejectsZeroTarget) {
  EXPECT_THROW(build_psi(identity_channel(2), HermitianMatrix(ComplexMatrix::Zero(2, 2))),
               DomainError);
}

TEST(KernelIntersection, PureStateHasNoDirection) {
  Rng rng = make_rng(63);
  const DensityMatrix rho = random_density(3, 1, rng);
  ComplexMatrix one(1, 1);
  one(0, 0) = 1.0;
  EXPECT_FALSE(kernel_intersection(build_psi(trace_map(3), HermitianMatrix(one)), rho));
}

TEST(KernelIntersection, TraceMapReturnsTracelessDirection) {
  for (int n = 2; n <= 4; ++n) {
    ComplexMatrix one(1, 1);
    one(0, 0) = 1.0;
    const RealLinearMap psi = build_psi(trace_map(n), HermitianMatrix(one));
    const DensityMatrix mixed(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
    const auto x = kernel_intersection(psi, mixed);
    ASSERT_TRUE(x.has_value());
    EXPECT_NEAR(x->matrix().norm(), 1.0, 1e-12);
    EXPECT_LT(std::abs(x->matrix().trace()), 1e-12);
    EXPECT_LT(psi(x->matrix()).norm(), 1e-8);
  }
}

TEST(KernelIntersection, PlantedKernelDirection) {
  Rng rng = make_rng(64);
  // Pinching on C^3 restricted to a rank-2 state: the kernel is spanned by
  // off-diagonal Hermitians that live inside the state's support.
  const SuperOp phi = pinching(3);
  ComplexMatrix rho_m = ComplexMatrix::Zero(3, 3);
  rho_m(0, 0) = 0.5;
  rho_m(1, 1) = 0.5;
  const DensityMatrix rho(rho_m);
  const RealLinearMap psi =
      build_psi(phi, HermitianMatrix(chandist::apply(phi, rho.matrix())));
  const auto x = kernel_intersection(psi, rho);
  ASSERT_TRUE(x.has_value());
  EXPECT_LT(psi(x->matrix()).norm(), 1e-8);
  EXPECT_LT(std::abs(x->matrix().trace()), 1e-12);
  EXPECT_NEAR(x->matrix().norm(), 1.0, 1e-12);
  EXPECT_LT(x->matrix().row(2).norm() + x->matrix().col(2).norm(), 1e-12);
  EXPECT_LT(std::abs(x->matrix()(0, 0)) + std::abs(x->matrix()(1, 1)), 1e-12);
}

TEST(KernelIntersection, DirectionExistsAboveDimensionCount) {
  Rng rng = make_rng(65);
  for (int t = 0; t < 10; ++t) {
    const SuperOp phi = random_cp_map(4, 2, 1 + t % 3, rng);
    const DensityMatrix rho = random_density(4, 3 + t % 2, rng);
    const ComplexMatrix p = chandist::apply(phi, rho.matrix());
    const RealLinearMap psi = build_psi(phi, HermitianMatrix(p));
    const int k = static_cast<int>(psi.range_basis.cols());
    const int r = density_rank(rho);
    ASSERT_GT(r * r, k * k + 2);
    const auto x = kernel_intersection(psi, rho);
    ASSERT_TRUE(x.has_value());
    EXPECT_LT(psi(x->matrix()).norm(), 1e-8);
  }
}

TEST(BoundaryStep, Examples) {
  const DensityMatrix half(ComplexMatrix::Identity(2, 2) / 2.0);
  const DensityMatrix two =
      boundary_step(half, HermitianMatrix(diag({1, -1}) / std::sqrt(2.0)));
  const bool first = max_abs_diff(two.matrix(), diag({1, 0})) < 1e-12;
  const bool second = max_abs_diff(two.matrix(), diag({0, 1})) < 1e-12;
  EXPECT_TRUE(first || second);

  // Along +X the two degenerate -1 directions vanish together and the rank
  // drops to 1; along -X only the first one does.
  const DensityMatrix third(ComplexMatrix::Identity(3, 3) / 3.0);
  const ComplexMatrix x = diag({2, -1, -1}) / std::sqrt(6.0);
  const DensityMatrix plus = boundary_step(third, HermitianMatrix(x));
  EXPECT_EQ(density_rank(plus), 1);
  EXPECT_LT(max_abs_diff(plus.matrix(), diag({1, 0, 0})), 1e-12);
  const DensityMatrix minus = boundary_step(third, HermitianMatrix(-x));
  EXPECT_EQ(density_rank(minus), 2);
  EXPECT_LT(max_abs_diff(minus.matrix(), diag({0, 0.5, 0.5})), 1e-12);
  expect_valid_density(plus);
  expect_valid_density(minus);
}

TEST(BoundaryStep, RandomDirectionsDropRank) {
  Rng rng = make_rng(66);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    const DensityMatrix rho = random_density(n, n, rng);
    ComplexMatrix x = random_hermitian(n, rng);
    x -= (x.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
    const DensityMatrix next = boundary_step(rho, HermitianMatrix(x));
    expect_valid_density(next);
    EXPECT_LT(density_rank(next), n);
  }
}

TEST(BoundaryStep, RejectsInvalidDirections) {
  const DensityMatrix half(ComplexMatrix::Identity(2, 2) / 2.0);
  EXPECT_THROW(boundary_step(half, HermitianMatrix(diag({1, 1}))), DomainError);
  const DensityMatrix pure(diag({1, 0, 0}));
  ComplexMatrix x = ComplexMatrix::Zero(3, 3);
  x(1, 2) = x(2, 1) = 1.0;
  EXPECT_THROW(boundary_step(pure, HermitianMatrix(x)), DomainError);
  EXPECT_THROW(boundary_step(half, HermitianMatrix(ComplexMatrix::Zero(2, 2))), DomainError);
}

TEST(ReducePreimage, ScalarOutputGivesPureState) {
  Rng rng = make_rng(67);
  const SuperOp unitary = unitary_channel(random_unitary(3, rng));
  const auto [psi_a, psi_b] = complementary_pair(unitary.stinespring());
  const ReductionResult r = reduce_preimage(psi_a, random_density(3, 3, rng));
  EXPECT_EQ(r.rank_before, 3);
  EXPECT_EQ(r.target_rank, 1);
  EXPECT_EQ(r.rank_after, 1);
  EXPECT_LE(r.residual, 1e-7);
  expect_valid_density(r.rho);
}

TEST(ReducePreimage, PlantedLowRankOutput) {
  Rng rng = make_rng(68);
  for (int t = 0; t < 10; ++t) {
    // Outputs live in C^2 while inputs are full rank on C^4.
    const SuperOp phi = random_channel(4, 2, 2 + t % 2, rng);
    const DensityMatrix rho0 = random_density(4, 4, rng);
    const ComplexMatrix p = chandist::apply(phi, rho0.matrix());
    const ReductionResult r = reduce_preimage(phi, rho0);
    EXPECT_LE(r.rank_after, r.target_rank);
    EXPECT_LE((chandist::apply(phi, r.rho.matrix()) - p).norm(), 1e-7);
    EXPECT_LE(static_cast<int>(r.trace.steps.size()), phi.dim_in());
    expect_valid_density(r.rho);
  }
}

TEST(ReducePreimage, IdentityChannelLeavesStateAlone) {
  Rng rng = make_rng(69);
  const DensityMatrix rho0 = random_density(3, 3, rng);
  const ReductionResult r = reduce_preimage(identity_channel(3), rho0);
  EXPECT_TRUE(r.trace.steps.empty());
  EXPECT_EQ(r.rank_after, 3);
  EXPECT_LT(max_abs_diff(r.rho.matrix(), rho0.matrix()), 1e-12);
}

TEST(ReducePreimage, ZeroOutputGivesTopEigenvector) {
  Rng rng = make_rng(70);
  const SuperOp zero(KrausRep(3, 2, {}));
  const DensityMatrix rho0 = random_density(3, 3, rng);
  const ReductionResult r = reduce_preimage(zero, rho0);
  EXPECT_EQ(r.rank_after, 1);
  const EigenDecomposition e = eigh(rho0.hermitian());
  EXPECT_NEAR(std::abs(e.vectors.col(0).dot(r.rho.matrix() * e.vectors.col(0))), 1.0, 1e-12);
}

TEST(ReducePreimage, RejectsNonPositiveMaps) {
  const SuperOp negated(KrausRep(2, 2, {{ComplexMatrix::Identity(2, 2),
                                         -ComplexMatrix::Identity(2, 2)}}));
  EXPECT_THROW(reduce_preimage(negated, DensityMatrix(ComplexMatrix::Identity(2, 2) / 2.0)),
               DomainError);
  // The transpose map is positive though not completely positive.
  EXPECT_NO_THROW(reduce_preimage(transpose_map(2),
                                  DensityMatrix(ComplexMatrix::Identity(2, 2) / 2.0)));
}

TEST(ReducePreimage, LoopInvariants) {
  Rng rng = make_rng(71);
  for (int t = 0; t < 10; ++t) {
    const int n = 3 + t % 2;
    const SuperOp phi = random_cp_map(n, 2, 1 + t % 2, rng);
    const DensityMatrix rho0 = random_density(n, n, rng);
    const ReductionResult r = reduce_preimage(phi, rho0);
    int prev = r.rank_before + 1;
    for (const ReductionStep& s : r.trace.steps) {
      EXPECT_LT(s.rank_before, prev);
      EXPECT_LE(s.residual, 1e-7);
      EXPECT_GT(s.step, 0.0);
      prev = s.rank_before;
    }
    EXPECT_LE(r.rank_after * r.rank_after, r.target_rank * r.target_rank + 2);
    EXPECT_LE(r.rank_after, r.target_rank);
    expect_valid_density(r.rho);
  }
}

}  // namespace
}  // namespace chandist
