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

#include "chandist/examples.hpp"

#include <cmath>
#include <string>

namespace chandist::examples {

ChannelPair werner_holevo_pair(int n) {
  if (n < 2) {
    throw DomainError("werner_holevo_pair: n must be >= 2, got " + std::to_string(n));
  }
  const SwapProjectors p = swap_and_projectors(n);
  SuperOp phi0(ChoiRep(n, n, (2.0 / (n + 1)) * p.symmetric));
  SuperOp phi1(ChoiRep(n, n, (2.0 / (n - 1)) * p.antisymmetric));
  return {std::move(phi0), std::move(phi1)};
}

DensityMatrix maximally_entangled(int n) {
  if (n < 1) throw DomainError("maximally_entangled: n must be >= 1");
  ComplexVector u = ComplexVector::Zero(static_cast<Eigen::Index>(n) * n);
  for (int a = 0; a < n; ++a) u(static_cast<Eigen::Index>(a) * n + a) = 1.0;
  return DensityMatrix::pure(u / std::sqrt(static_cast<double>(n)));
}

double wh_upper_bound(int n, int k) {
  if (n < 2) throw DomainError("wh_upper_bound: n must be >= 2");
  if (k < 1 || k > n) {
    throw DomainError("wh_upper_bound: k must lie in [1, " + std::to_string(n) + "]");
  }
  return 4.0 / (n + 1) + 2.0 * n * (k - 1) / (static_cast<double>(n) * n - 1.0);
}

ChannelPair pauli_pair() {
  const Complex i(0.0, 1.0);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, -i, i, 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  const double c = 1.0 / std::sqrt(3.0);
  SuperOp phi0 = identity_channel(2);
  SuperOp phi1(KrausRep::completely_positive(2, 2, {c * sx, c * sy, c * sz}));
  return {std::move(phi0), std::move(phi1)};
}

Family parse_family(const std::string& name) {
  if (name == "werner") return Family::werner;
  if (name == "pauli") return Family::pauli;
  throw DomainError("unknown example family '" + name + "' (expected werner or pauli)");
}

std::string family_name(Family f) { return f == Family::werner ? "werner" : "pauli"; }

std::vector<ExampleReport> run_example_sweep(Family family, int n,
                                             const std::vector<int>& k_list,
                                             const SolverOptions& opts) {
  if (family == Family::pauli && n != 2) {
    throw DomainError("pauli example acts on a qubit, n must be 2");
  }
  const ChannelPair pair = family == Family::werner ? werner_holevo_pair(n) : pauli_pair();
  std::vector<ExampleReport> out;
  out.reserve(k_list.size());
  for (int k : k_list) {
    if (k < 1 || k > n) {
      throw DomainError("ancilla dimension " + std::to_string(k) + " outside [1, " +
                        std::to_string(n) + "]");
    }
    ExampleReport r;
    r.n = n;
    r.k = k;
    r.dnorm_ref = 2.0;
    r.ancilla_value_computed = ancilla_value(pair.first, pair.second, k, opts).value;
    r.upper_bound = family == Family::werner ? wh_upper_bound(n, k) : 2.0;
    r.success_probability = 0.5 + r.ancilla_value_computed / 4.0;
    out.push_back(r);
  }
  return out;
}

}  // namespace chandist::examples
