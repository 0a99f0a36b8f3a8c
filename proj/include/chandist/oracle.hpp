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

#include "chandist/channel.hpp"

// Brute-force reference values for small problems. These share no solver code
// with the metrics module: they search the defining maximizations directly
// and are meant for cross-checking only. Hard dimension caps keep them from
// being run on anything large by accident.

namespace chandist::oracle {

inline constexpr int kDnormMaxDim = 4;
inline constexpr int kFmaxMaxDim = 3;

/// max ‖(Φ ⊗ 1_X)(uv^*)‖₁ over unit u, v ∈ X ⊗ X by multistart gradient
/// ascent on the product of spheres. dim_in <= 4.
double brute_dnorm(const SuperOp& phi, int restarts = 64, std::uint64_t seed = 0,
                   int threads = 1);

/// max F(Ψ_A(ρ1), Ψ_B(ρ2)) by multistart gradient ascent over purifications
/// of ρ1, ρ2 in X ⊗ X. Both maps CP with dim_in <= 3.
double brute_fmax(const SuperOp& psi_a, const SuperOp& psi_b, int restarts = 32,
                  std::uint64_t seed = 0, int threads = 1);

/// ‖U·U^* - V·V^*‖◇ in closed form: 2 sqrt(1 - ν^2) with ν the distance from
/// 0 to the convex hull of the eigenvalues of U^* V.
double unitary_pair_reference(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace chandist::oracle
