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
#include <utility>
#include <vector>

#include "chandist/channel.hpp"
#include "chandist/metrics.hpp"

// Two standard channel pairs with known distinguishability.
//
// Werner-Holevo:  Φ0(X) = ((Tr X) 1 + X^T) / (n + 1),
//                 Φ1(X) = ((Tr X) 1 - X^T) / (n - 1).
// Perfectly distinguishable with a maximally entangled input, yet nearly
// indistinguishable without an ancilla for large n.
//
// Pauli:  the identity against X -> (σx X σx + σy X σy + σz X σz) / 3.
// Perfectly distinguishable with one ancilla qubit, success 5/6 without.

namespace chandist::examples {

using ChannelPair = std::pair<SuperOp, SuperOp>;

/// Built from the Choi matrices (2/(n+1)) Π_sym and (2/(n-1)) Π_anti.
ChannelPair werner_holevo_pair(int n);

/// (1/n) Σ_{a,b} |a><b| ⊗ |a><b|.
DensityMatrix maximally_entangled(int n);

/// 4/(n+1) + 2n(k-1)/(n^2-1): the Werner-Holevo value cap with a
/// k-dimensional ancilla.
double wh_upper_bound(int n, int k);

ChannelPair pauli_pair();

enum class Family { werner, pauli };

Family parse_family(const std::string& name);
std::string family_name(Family f);

struct ExampleReport {
  int n = 0;
  int k = 0;
  double dnorm_ref = 2.0;
  double ancilla_value_computed = 0.0;
  double upper_bound = 0.0;
  double success_probability = 0.5;
};

/// One report per k. For the Pauli family n must be 2 and the bound column
/// is the trivial 2.
std::vector<ExampleReport> run_example_sweep(Family family, int n,
                                             const std::vector<int>& k_list,
                                             const SolverOptions& opts = {});

}  // namespace chandist::examples
