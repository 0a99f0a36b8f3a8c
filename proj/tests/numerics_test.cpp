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

#include "chandist/numerics.hpp"
#include "chandist/random.hpp"
#include "support.hpp"

namespace chandist {
namespace {

using testing::max_abs_diff;
using testing::pauli;
using testing::random_psd;

ComplexMatrix diag(std::initializer_list<double> d) {
  RealVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

TEST(TensorProduct, IdentityAndDiagonal) {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  EXPECT_LT(max_abs_diff(tensor_product(i2, i2), ComplexMatrix::Identity(4, 4)), 1e-15);
  EXPECT_LT(max_abs_diff(tensor_product(diag({1, 2}), diag({3, 4})), diag({3, 4, 6, 8})),
            1e-15);
}

TEST(TensorProduct, FirstFactorIsHighOrder) {
  ComplexVector zero = ComplexVector::Zero(4);
  zero(0) = 1.0;
  const ComplexVector out = tensor_product(pauli('x'), pauli('x')) * zero;
  EXPECT_NEAR(std::abs(out(3)), 1.0, 1e-15);
  EXPECT_NEAR(out.norm(), 1.0, 1e-15);

  ComplexMatrix a(1, 2), b(2, 1);
  a << 1.0, 2.0;
  b << 10.0, 20.0;
  const ComplexMatrix ab = tensor_product(a, b);
  ASSERT_EQ(ab.rows(), 2);
  ASSERT_EQ(ab.cols(), 2);
  EXPECT_EQ(ab(1, 0), Complex(20.0));
  EXPECT_EQ(ab(0, 1), Complex(20.0));
  EXPECT_EQ(ab(1, 1), Complex(40.0));
}

TEST(PartialTrace, ProductAndIdentity) {
  Rng rng = make_rng(1);
  const ComplexMatrix p = random_ginibre(2, 2, rng);
  const ComplexMatrix q = random_ginibre(2, 2, rng);
  const ComplexMatrix pq = tensor_product(p, q);
  EXPECT_LT(max_abs_diff(partial_trace(pq, 2, 2, Subsystem::B), q.trace() * p), 1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(pq, 2, 2, Subsystem::A), p.trace() * q), 1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(ComplexMatrix::Identity(4, 4), 2, 2, Subsystem::A),
                         2.0 * ComplexMatrix::Identity(2, 2)),
            1e-15);
}

TEST(PartialTrace, BellStateMarginal) {
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix m = partial_trace(phi * phi.adjoint(), 2, 2, Subsystem::B);
  EXPECT_LT(max_abs_diff(m, 0.5 * ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(PartialTrace, RejectsBadDimensions) {
  EXPECT_THROW(partial_trace(ComplexMatrix::Identity(5, 5), 2, 2, Subsystem::A),
               DimensionError);
}

TEST(Eigh, DiagonalAndPauli) {
  const EigenDecomposition d = eigh(HermitianMatrix(diag({3, 1, 2})));
  EXPECT_NEAR(d.values(0), 3.0, 1e-14);
  EXPECT_NEAR(d.values(1), 2.0, 1e-14);
  EXPECT_NEAR(d.values(2), 1.0, 1e-14);

  const EigenDecomposition x = eigh(HermitianMatrix(pauli('x')));
  EXPECT_NEAR(x.values(0), 1.0, 1e-14);
  EXPECT_NEAR(x.values(1), -1.0, 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(x.vectors(0, 0)), s, 1e-14);
  EXPECT_NEAR(std::abs(x.vectors(1, 0)), s, 1e-14);
  EXPECT_NEAR(std::abs(x.vectors(0, 0) + x.vectors(1, 0)), 2 * s, 1e-14);
  EXPECT_NEAR(std::abs(x.vectors(0, 1) - x.vectors(1, 1)), 2 * s, 1e-14);
}

TEST(Eigh, RandomReconstruction) {
  Rng rng = make_rng(2);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix h = random_hermitian(5, rng);
    const EigenDecomposition d = eigh(HermitianMatrix(h));
    const ComplexMatrix back =
        d.vectors * d.values.cast<Complex>().asDiagonal() * d.vectors.adjoint();
    EXPECT_LE(max_abs_diff(back, h), 1e-10 * spectral_norm(h));
    for (int i = 0; i + 1 < 5; ++i) EXPECT_GE(d.values(i), d.values(i + 1));
  }
}

TEST(Svd, Examples) {
  EXPECT_NEAR(singular_values(diag({1, -2}))(0), 2.0, 1e-14);
  EXPECT_NEAR(singular_values(diag({1, -2}))(1), 1.0, 1e-14);

  Rng rng = make_rng(3);
  const RealVector su = singular_values(random_unitary(4, rng));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(su(i), 1.0, 1e-12);

  const ComplexVector u = random_ginibre(3, 1, rng);
  const ComplexVector v = random_ginibre(4, 1, rng);
  const RealVector s1 = singular_values(u * v.adjoint());
  EXPECT_NEAR(s1(0), u.norm() * v.norm(), 1e-12);
  EXPECT_LT(s1(1), 1e-12);
}

TEST(Svd, RandomReconstruction) {
  Rng rng = make_rng(4);
  const ComplexMatrix a = random_ginibre(4, 3, rng);
  const SingularValueDecomposition d = svd(a);
  const ComplexMatrix back = d.u * d.values.cast<Complex>().asDiagonal() * d.v.adjoint();
  EXPECT_LE(max_abs_diff(back, a), 1e-10 * spectral_norm(a));
}

TEST(Norms, Examples) {
  EXPECT_NEAR(trace_norm(diag({1, -2})), 3.0, 1e-14);
  EXPECT_NEAR(spectral_norm(diag({1, -2})), 2.0, 1e-14);

  Rng rng = make_rng(5);
  EXPECT_NEAR(trace_norm(random_unitary(3, rng)), 3.0, 1e-12);

  const ComplexVector u = random_unit_vector(3, rng);
  ComplexVector v = random_unit_vector(3, rng);
  v -= u * u.dot(v);
  v.normalize();
  EXPECT_NEAR(trace_norm(u * u.adjoint() - v * v.adjoint()), 2.0, 1e-12);
  EXPECT_NEAR(spectral_norm(u * u.adjoint()), 1.0, 1e-12);
  EXPECT_NEAR(spectral_norm(3.0 * u * v.adjoint()), 3.0, 1e-12);
}

TEST(Norms, OrderingAndUnitaryInvariance) {
  Rng rng = make_rng(6);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_ginibre(4, 4, rng);
    EXPECT_GE(trace_norm(a), spectral_norm(a));
    EXPECT_GE(spectral_norm(a), 0.0);
    const ComplexMatrix r = random_ginibre(4, 1, rng) * random_ginibre(1, 4, rng);
    EXPECT_NEAR(trace_norm(r), spectral_norm(r), 1e-12);
    const ComplexMatrix u = random_unitary(4, rng);
    const ComplexMatrix v = random_unitary(4, rng);
    EXPECT_NEAR(trace_norm(u * a * v), trace_norm(a), 1e-9);
  }
}

TEST(SqrtmPsd, Examples) {
  EXPECT_LT(max_abs_diff(sqrtm_psd(HermitianMatrix(diag({4, 9}))).matrix(), diag({2, 3})),
            1e-14);
  Rng rng = make_rng(7);
  const ComplexVector u = random_unit_vector(3, rng);
  const ComplexMatrix proj = u * u.adjoint();
  EXPECT_LT(max_abs_diff(sqrtm_psd(HermitianMatrix(proj)).matrix(), proj), 1e-12);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix p = random_psd(4, 2 + t % 3, rng);
    const ComplexMatrix r = sqrtm_psd(HermitianMatrix(p)).matrix();
    EXPECT_LE(max_abs_diff(r * r, p), 1e-9 * spectral_norm(p));
  }
}

TEST(SqrtmPsd, ClipsRoundoffAndRejectsNegative) {
  EXPECT_NO_THROW(sqrtm_psd(HermitianMatrix(diag({1, -1e-11}))));
  EXPECT_THROW(sqrtm_psd(HermitianMatrix(diag({1, -1e-3}))), DomainError);
}

TEST(Fidelity, Examples) {
  Rng rng = make_rng(8);
  const DensityMatrix rho = random_density(3, 3, rng);
  EXPECT_NEAR(fidelity(rho.hermitian(), rho.hermitian()), 1.0, 1e-10);

  const ComplexVector u = random_unit_vector(3, rng);
  const ComplexVector v = random_unit_vector(3, rng);
  EXPECT_NEAR(fidelity(HermitianMatrix(u * u.adjoint()), HermitianMatrix(v * v.adjoint())),
              std::abs(u.dot(v)), 1e-9);
}

TEST(Fidelity, AlternateFormulaAndSymmetry) {
  Rng rng = make_rng(9);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix p = random_psd(3, 1 + t % 3, rng);
    const ComplexMatrix q = random_psd(3, 1 + (t + 1) % 3, rng);
    const ComplexMatrix sq = sqrtm_psd(HermitianMatrix(q)).matrix();
    const ComplexMatrix inner = sq * p * sq;
    const double alt = sqrtm_psd(HermitianMatrix(inner)).matrix().trace().real();
    const double f = fidelity(HermitianMatrix(p), HermitianMatrix(q));
    EXPECT_NEAR(f, alt, 1e-9);
    EXPECT_NEAR(f, fidelity(HermitianMatrix(q), HermitianMatrix(p)), 1e-9);
  }
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix a = random_density(4, 1 + t % 4, rng);
    const DensityMatrix b = random_density(4, 1 + (t + 2) % 4, rng);
    const double f = fidelity(a.hermitian(), b.hermitian());
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + 1e-12);
  }
}

TEST(Fidelity, RejectsNonPsd) {
  EXPECT_THROW(fidelity(HermitianMatrix(diag({1, -1})), HermitianMatrix(diag({1, 1}))),
               DomainError);
}

TEST(Purify, Examples) {
  ComplexVector zero = ComplexVector::Zero(2);
  zero(0) = 1.0;
  const UnitVector p0 = purify(DensityMatrix::pure(zero), 1);
  ASSERT_EQ(p0.dim(), 2);
  EXPECT_NEAR(std::abs(p0.vector()(0)), 1.0, 1e-14);

  const UnitVector bell = purify(DensityMatrix(0.5 * ComplexMatrix::Identity(2, 2)), 2);
  const ComplexMatrix uu = bell.vector() * bell.vector().adjoint();
  EXPECT_LT(max_abs_diff(partial_trace(uu, 2, 2, Subsystem::A),
                         0.5 * ComplexMatrix::Identity(2, 2)),
            1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(uu, 2, 2, Subsystem::B),
                         0.5 * ComplexMatrix::Identity(2, 2)),
            1e-12);
}

TEST(Purify, RoundtripAndTooSmallAncilla) {
  Rng rng = make_rng(10);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + t % 3;
    const int r = 1 + t % n;
    const DensityMatrix rho = random_density(n, r, rng);
    const UnitVector u = purify(rho, r);
    EXPECT_NEAR(u.vector().norm(), 1.0, 1e-12);
    const ComplexMatrix back =
        partial_trace(u.vector() * u.vector().adjoint(), n, r, Subsystem::B);
    EXPECT_LT(max_abs_diff(back, rho.matrix()), 1e-9);
  }
  EXPECT_THROW(purify(random_density(3, 2, rng), 1), DimensionError);
}

TEST(RankEps, Examples) {
  EXPECT_EQ(rank_eps(ComplexMatrix::Zero(3, 3)), 0);
  Rng rng = make_rng(11);
  const ComplexMatrix v = random_isometry(5, 3, rng);
  EXPECT_EQ(rank_eps(v * v.adjoint()), 3);
  EXPECT_EQ(rank_eps(diag({1, 1e-15}), 1e-9), 1);
}

TEST(SwapProjectors, Examples) {
  const SwapProjectors p2 = swap_and_projectors(2);
  EXPECT_NEAR(p2.symmetric.trace().real(), 3.0, 1e-14);
  EXPECT_NEAR(p2.antisymmetric.trace().real(), 1.0, 1e-14);
  EXPECT_LT((p2.symmetric * p2.antisymmetric).cwiseAbs().maxCoeff(), 1e-15);

  const SwapProjectors p3 = swap_and_projectors(3);
  EXPECT_LT(max_abs_diff(p3.symmetric + p3.antisymmetric, ComplexMatrix::Identity(9, 9)),
            1e-15);
}

TEST(SwapProjectors, StructuralProperties) {
  Rng rng = make_rng(12);
  for (int n = 1; n <= 4; ++n) {
    const SwapProjectors p = swap_and_projectors(n);
    const ComplexVector a = random_unit_vector(n, rng);
    const ComplexVector b = random_unit_vector(n, rng);
    EXPECT_LT((p.swap * tensor_product(a, b) - tensor_product(b, a)).norm(), 1e-14);
    for (const ComplexMatrix* m : {&p.symmetric, &p.antisymmetric}) {
      EXPECT_LT(max_abs_diff(*m * *m, *m), 1e-14);
      EXPECT_LT(hermiticity_defect(*m), 1e-15);
    }
    EXPECT_NEAR(p.symmetric.trace().real(), n * (n + 1) / 2.0, 1e-13);
    EXPECT_NEAR(p.antisymmetric.trace().real(), n * (n - 1) / 2.0, 1e-13);
  }
}

TEST(Types, ConstructionInvariants) {
  ComplexMatrix almost(2, 2);
  almost << 1.0, Complex(0.0, 1e-13), Complex(0.0, 0.0), 2.0;
  EXPECT_LE(hermiticity_defect(HermitianMatrix(almost).matrix()), 1e-12);

  EXPECT_THROW(DensityMatrix(diag({0.5, 0.6})), DomainError);
  EXPECT_THROW(DensityMatrix(diag({1.5, -0.5})), DomainError);
  const DensityMatrix clipped(diag({1.0 + 1e-11, -1e-11}));
  EXPECT_GE(eigh(clipped.hermitian()).values.minCoeff(), 0.0);

  EXPECT_THROW(UnitVector(ComplexVector::Ones(2)), DomainError);
  EXPECT_NEAR(UnitVector::normalize(ComplexVector::Ones(2)).vector().norm(), 1.0, 1e-15);
  EXPECT_THROW(HermitianMatrix(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST(Random, SeededStreamsAreReproducible) {
  Rng a = make_rng(42, 3, 7);
  Rng b = make_rng(42, 3, 7);
  Rng c = make_rng(42, 3, 8);
  const ComplexMatrix ma = random_ginibre(3, 3, a);
  EXPECT_EQ(ma, random_ginibre(3, 3, b));
  EXPECT_NE(ma, random_ginibre(3, 3, c));
}

}  // namespace
}  // namespace chandist
