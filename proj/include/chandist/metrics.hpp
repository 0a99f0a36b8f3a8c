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

#include <cstdint>
#include <vector>

#include "chandist/channel.hpp"
#include "chandist/numerics.hpp"

// Distinguishability functionals for states and super-operators.
//
// The diamond norm is computed through maximum output fidelity: for any
// dilation Φ(X) = Tr_Z(A X B^*), ‖Φ ⊗ 1_{W_k}‖₁ equals the largest fidelity
// F(Ψ_A(ρ1), Ψ_B(ρ2)) over inputs of rank at most k, where Ψ_A, Ψ_B trace out
// Y instead of Z. Taking k = dim(X) gives ‖Φ‖◇; taking k = rank J(Φ) already
// suffices.

namespace chandist {

struct SolverOptions {
  /// Certified duality gap for the convex solve.
  double tol = 1e-6;
  int max_iters = 5000;
  /// Random restarts for the nonconvex (purified) searches.
  int restarts = 16;
  std::uint64_t seed = 0;
  std::vector<double> smoothing_schedule = {1e-4, 1e-6, 1e-8};
  /// Worker threads for restarts. Results do not depend on this value.
  int threads = 1;
};

struct HelstromResult {
  HermitianMatrix projector;  // onto the nonnegative eigenspace of ρ0 - ρ1
  double success_probability = 0.5;
};

/// Optimal two-outcome measurement for telling ρ0 from ρ1 given with equal
/// priors; success 1/2 + ‖ρ0 - ρ1‖₁/4.
HelstromResult helstrom(const DensityMatrix& rho0, const DensityMatrix& rho1);

struct FMaxResult {
  /// F(Ψ_A(rho_a), Ψ_B(rho_b)), recomputed without smoothing.
  double value = 0.0;
  DensityMatrix rho_a;
  DensityMatrix rho_b;
  int iterations = 0;
  bool converged = false;
  /// Dual certificate from the variational form of the fidelity; fmax only.
  /// For fmax_k this is +infinity (no certificate for the rank-restricted set).
  double upper_bound = 0.0;
};

/// max F(Ψ_A(ρ1), Ψ_B(ρ2)) over all density pairs. Projected gradient ascent
/// on the (jointly concave) smoothed objective, restarted once from a random
/// point, with a dual upper bound certifying the gap.
FMaxResult fmax(const SuperOp& psi_a, const SuperOp& psi_b,
                const SolverOptions& opts = {});

/// Same maximum restricted to ρ1, ρ2 of rank at most k, searched over
/// purifications u, v ∈ X ⊗ W_k with multistart alternating ascent.
FMaxResult fmax_k(const SuperOp& psi_a, const SuperOp& psi_b, int k,
                  const SolverOptions& opts = {});

/// ‖Φ ⊗ 1_{W_k}‖₁ as fmax_k of the complementary pair of Φ's dilation.
double tnorm_ext(const SuperOp& phi, int k, const SolverOptions& opts = {});

/// Minimal dilation Φ(X) = Tr_Z(A X B^*) with dim Z = rank J(Φ), plus its
/// complementary maps.
struct ComplementaryDilation {
  int choi_rank = 0;
  StinespringRep stinespring;
  SuperOp psi_a;
  SuperOp psi_b;
};
ComplementaryDilation minimal_complementary_pair(const SuperOp& phi,
                                                 double tau = kDefaultRankTol);

struct DiamondNormResult {
  double value = 0.0;
  double upper_bound = 0.0;
  int choi_rank = 0;
  bool converged = true;
  int iterations = 0;
};

/// ‖Φ‖◇ as fmax of the complementary pair of a rank J(Φ)-dimensional
/// dilation.
DiamondNormResult dnorm(const SuperOp& phi, const SolverOptions& opts = {});

struct AncillaValueResult {
  double value = 0.0;
  UnitVector input;  // on X ⊗ W_k
  int iterations = 0;
  bool converged = false;
};

/// max over unit u ∈ X ⊗ W_k of ‖((Φ0 - Φ1) ⊗ 1)(uu^*)‖₁: the best
/// discrimination with a k-dimensional ancilla and a pure input. Warm-started
/// from the k-1 optimum, so nondecreasing in k.
AncillaValueResult ancilla_value(const SuperOp& phi0, const SuperOp& phi1,
                                 int k, const SolverOptions& opts = {});

/// 1/2 + ‖Φ0 - Φ1‖◇/4.
double channel_success(const SuperOp& phi0, const SuperOp& phi1,
                       const SolverOptions& opts = {});

}  // namespace chandist
