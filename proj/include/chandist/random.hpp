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
#include <random>
#include <vector>

#include "chandist/numerics.hpp"

namespace chandist {

using Rng = std::mt19937_64;

/// Independent, reproducible stream for (seed, stream, index). Used so that
/// every multistart restart draws from its own generator regardless of the
/// order in which restarts execute.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0,
             std::uint64_t index = 0);

/// Entries i.i.d. standard complex normal.
ComplexMatrix random_ginibre(int rows, int cols, Rng& rng);
ComplexVector random_unit_vector(int dim, Rng& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int n, Rng& rng);
/// rows x cols isometry (cols <= rows), V^* V = I.
ComplexMatrix random_isometry(int rows, int cols, Rng& rng);
ComplexMatrix random_hermitian(int n, Rng& rng);
/// Random density operator of the given rank (induced measure).
DensityMatrix random_density(int n, int rank, Rng& rng);
/// Kraus operators of a random channel from C^dim_in to C^dim_out with
/// `count` operators, drawn from a random Stinespring isometry.
std::vector<ComplexMatrix> random_kraus(int dim_in, int dim_out, int count,
                                        Rng& rng);

}  // namespace chandist
