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

#pragma once

#include <optional>
#include <vector>

#include "chandist/channel.hpp"
#include "chandist/numerics.hpp"

// Rank reduction of channel preimages.
//
// Given a positive map Φ and an input ρ0 with P = Φ(ρ0) of rank k, walks ρ
// along directions that leave Φ(ρ) unchanged until rank(ρ) <= k. A direction
// X must be traceless, supported on im(ρ), and annihilated by
//   Ψ(X) = (Π_U Φ(X) Π_U, Tr[(1 - Π_U) Φ(X)]),   U = im(P),
// which has only k^2 + 1 real constraints, so one exists while
// rank(ρ)^2 - 1 > k^2 + 1.

namespace chandist {

/// Orthonormal basis of Herm(C^n) over the reals, in this order: E_aa for
/// a = 0..n-1, then for each a < b (row-major) (E_ab + E_ba)/sqrt2 followed by
/// i(E_ab - E_ba)/sqrt2.
ComplexMatrix hermitian_basis_element(int n, int index);
RealVector hermitian_coordinates(const ComplexMatrix& h);
ComplexMatrix from_hermitian_coordinates(const RealVector& c, int n);

/// A real-linear map between Hermitian operator spaces, as a matrix acting on
/// coordinates in the basis above.
struct RealLinearMap {
  int domain_dim = 0;    // n^2
  int codomain_dim = 0;  // k^2 + 1
  RealMatrix matrix;
  ComplexMatrix range_basis;  // isometry onto U = im(P), dim_out x k

  RealVector operator()(const ComplexMatrix& x) const;
};

RealLinearMap build_psi(const SuperOp& phi, const HermitianMatrix& p,
                        double tau = kDefaultRankTol);

/// All unit-Frobenius kernel directions of Ψ within the traceless Hermitians
/// on im(ρ), best residual first. Empty when the intersection is trivial.
std::vector<HermitianMatrix> kernel_directions(const RealLinearMap& psi,
                                               const DensityMatrix& rho,
                                               double tau = kDefaultRankTol);
std::optional<HermitianMatrix> kernel_intersection(
    const RealLinearMap& psi, const DensityMatrix& rho,
    double tau = kDefaultRankTol);

/// ρ + t X for the largest t keeping it positive semidefinite, so the rank
/// drops. X is negated first if that is the only way to reach the boundary.
DensityMatrix boundary_step(const DensityMatrix& rho, const HermitianMatrix& x,
                            double tau = kDefaultRankTol);

struct ReductionStep {
  int rank_before = 0;
  double step = 0.0;
  double residual = 0.0;  // ‖Φ(ρ) - P‖_F after the step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReductionResult {
  DensityMatrix rho;
  ReductionTrace trace;
  int rank_before = 0;
  int rank_after = 0;
  int target_rank = 0;  // rank of P
  double residual = 0.0;
};

/// Some ρ with Φ(ρ) = Φ(ρ0) and rank(ρ) <= rank(Φ(ρ0)). When Φ(ρ0) = 0 the
/// result is the pure state on the top eigenvector of ρ0.
ReductionResult reduce_preimage(const SuperOp& phi, const DensityMatrix& rho0,
                                double tau = kDefaultRankTol);

/// Rank of a density operator under the same cutoff the reduction uses.
int density_rank(const DensityMatrix& rho, double tau = kDefaultRankTol);

}  // namespace chandist
