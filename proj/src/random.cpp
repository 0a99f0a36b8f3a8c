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

#include "chandist/random.hpp"

#include <cmath>

namespace chandist {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ stream);
  h = splitmix64(h ^ index);
  return Rng(h);
}

ComplexMatrix random_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexVector random_unit_vector(int dim, Rng& rng) {
  ComplexVector v = random_ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  return random_isometry(n, n, rng);
}

ComplexMatrix random_isometry(int rows, int cols, Rng& rng) {
  if (cols > rows) {
    throw DimensionError("random_isometry: cols must not exceed rows");
  }
  const ComplexMatrix z = random_ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  const ComplexMatrix q =
      qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR();
  ComplexMatrix out = q;
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) out.col(j) *= d / mag;
  }
  return out;
}

ComplexMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

DensityMatrix random_density(int n, int rank, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, rank, rng);
  const ComplexMatrix p = g * g.adjoint();
  return DensityMatrix::normalized(p);
}

std::vector<ComplexMatrix> random_kraus(int dim_in, int dim_out, int count,
                                        Rng& rng) {
  const ComplexMatrix v = random_isometry(dim_out * count, dim_in, rng);
  std::vector<ComplexMatrix> ops(count, ComplexMatrix(dim_out, dim_in));
  for (int y = 0; y < dim_out; ++y) {
    for (int j = 0; j < count; ++j) {
      ops[j].row(y) = v.row(y * count + j);
    }
  }
  return ops;
}

}  // namespace chandist
