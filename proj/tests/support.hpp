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

#include <cmath>
#include <utility>
#include <vector>

#include "chandist/channel.hpp"
#include "chandist/random.hpp"

// Seeded generators shared by the unit tests and the acceptance suite.

namespace chandist::testing {

inline SuperOp random_channel(int dim_in, int dim_out, int count, Rng& rng) {
  return SuperOp(KrausRep::completely_positive(dim_in, dim_out,
                                               random_kraus(dim_in, dim_out, count, rng)));
}

inline SuperOp random_cp_map(int dim_in, int dim_out, int count, Rng& rng) {
  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < count; ++j) ops.push_back(random_ginibre(dim_out, dim_in, rng) * 0.5);
  return SuperOp(KrausRep::completely_positive(dim_in, dim_out, ops));
}

/// Two channels on C^n whose difference has Choi rank exactly `rank`
/// (2 or 3). Φ1 copies the Kraus list of Φ0 except for its first operator K,
/// which becomes W K (rank 2, W a random unitary) or V1 K, V2 K (rank 3,
/// [V1; V2] a random isometry); both changes preserve Σ K^* K.
inline std::pair<SuperOp, SuperOp> planted_pair(int n, int rank, int count, Rng& rng) {
  const std::vector<ComplexMatrix> ops = random_kraus(n, n, count, rng);
  std::vector<ComplexMatrix> changed(ops.begin() + 1, ops.end());
  if (rank == 2) {
    changed.push_back(random_unitary(n, rng) * ops[0]);
  } else if (rank == 3) {
    const ComplexMatrix v = random_isometry(2 * n, n, rng);
    changed.push_back(v.topRows(n) * ops[0]);
    changed.push_back(v.bottomRows(n) * ops[0]);
  } else {
    throw DomainError("planted_pair supports ranks 2 and 3");
  }
  return {SuperOp(KrausRep::completely_positive(n, n, ops)),
          SuperOp(KrausRep::completely_positive(n, n, changed))};
}

inline ComplexMatrix pauli(char which) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (which) {
    case 'x':
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'y':
      m << 0.0, -i, i, 0.0;
      break;
    case 'z':
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      m = ComplexMatrix::Identity(2, 2);
  }
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix random_psd(int n, int rank, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, rank, rng);
  return g * g.adjoint();
}

}  // namespace chandist::testing
