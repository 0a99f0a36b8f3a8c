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

#include <string>
#include <vector>

#include "chandist/channel.hpp"
#include "chandist/metrics.hpp"
#include "chandist/numerics.hpp"
#include "chandist/rankred.hpp"

// Optimal inputs for telling two channels apart.
//
// For k = rank J(Φ0 - Φ1) an input on X ⊗ W with dim W = 2k always attains
// the diamond norm. The construction: solve the fidelity problem for the
// complementary maps, shrink both optimal densities to rank <= k, purify
// them into X ⊗ V (dim V = k), and turn the resulting non-Hermitian optimum
// u'v'^* into a pure state by doubling V with a qubit Q. The ancilla factor
// V ⊗ Q comes last in the input vector: index x * 2k + v * 2 + q.

namespace chandist {

/// For ‖X‖₁ = 1, a unit u on (input of delta) ⊗ (ancilla) ⊗ C^2 with
/// ‖(Δ ⊗ 1)(uu^*)‖₁ >= ‖(Δ ⊗ 1)(X)‖₁, chosen among the eigenvectors of
/// Y = ½ X ⊗ |0><1| + ½ X^* ⊗ |1><0|. X acts on dim_in(delta) * ancilla_dim.
UnitVector hermitian_doubling(const ComplexMatrix& x, const SuperOp& delta,
                              int ancilla_dim);
/// Same with Δ_ext already acting on the whole space of X.
UnitVector hermitian_doubling(const ComplexMatrix& x, const SuperOp& delta_ext);

struct DiscriminationDiagnostics {
  /// F(Ψ_A(ρ_A), Ψ_B(ρ_B)) for the rank-reduced densities.
  double fidelity_route_value = 0.0;
  /// ‖(Δ ⊗ 1_V)(u'v'^*)‖₁ for their purifications; equal in exact arithmetic.
  double trace_norm_route_value = 0.0;
  bool discrepancy = false;  // the two routes differ by more than 1e-6
  bool solver_converged = true;
  int solver_iterations = 0;
  int rank_a_before = 0;
  int rank_b_before = 0;
  int rank_a = 0;
  int rank_b = 0;
  ReductionTrace reduction_a;
  ReductionTrace reduction_b;
};

struct DiscriminationResult {
  UnitVector input_vector;  // on X ⊗ W, dim W = ancilla_dim (X alone if 0)
  int ancilla_dim = 0;
  double achieved_value = 0.0;
  double dnorm_value = 0.0;
  double dnorm_upper_bound = 0.0;
  int choi_rank_k = 0;
  HelstromResult measurement;
  DiscriminationDiagnostics diagnostics;
};

/// Both channels admissible with equal dimensions. Solver trouble is reported
/// through diagnostics (solver_converged, discrepancy) rather than thrown.
DiscriminationResult optimal_input(const SuperOp& phi0, const SuperOp& phi1,
                                   const SolverOptions& opts = {});

struct VerificationReport {
  bool passed = false;
  double value_residual = 0.0;        // |recomputed trace distance - achieved|
  double success_residual = 0.0;      // |Helstrom success - stored success|
  double measurement_residual = 0.0;  // |Tr(Π(ω0 - ω1)) - ‖ω0 - ω1‖₁/2|
  double bound_residual = 0.0;        // |stored success - (1/2 + value/4)|
  std::vector<std::string> failures;
};

/// Recomputes the output states from the stored input and checks every stored
/// quantity against them at 1e-8.
VerificationReport verify(const DiscriminationResult& result,
                          const SuperOp& phi0, const SuperOp& phi1);

}  // namespace chandist
