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

#include "chandist/rankred.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chandist/random.hpp"

namespace chandist {

namespace {

constexpr double kNullTol = 1e-8;
constexpr double kKernelResidualTol = 1e-8;
constexpr double kDegenerateTol = 1e-10;
constexpr double kTruncateFloor = 1e-10;
constexpr double kOutputTol = 1e-7;
constexpr double kPositivityTol = 1e-9;
constexpr std::uint64_t kPositivitySeed = 0x504f53;  // "POS"

// Orthonormal basis of the support of a PSD operator, with its eigenvalues.
struct Support {
  ComplexMatrix basis;
  RealVector values;
};

Support support_of(const ComplexMatrix& h, double tau) {
  const EigenDecomposition e = eigh(HermitianMatrix(h));
  const double cutoff = std::max(kTruncateFloor, tau * std::max(e.values(0), 0.0));
  int r = 0;
  while (r < e.values.size() && e.values(r) > cutoff) ++r;
  return {e.vectors.leftCols(r), e.values.head(r)};
}

// Drops eigenvalues at or below the cutoff and restores unit trace.
DensityMatrix cleanup(const ComplexMatrix& rho, double tau) {
  const Support s = support_of((rho + rho.adjoint()) / 2.0, tau);
  const RealVector p = s.values / s.values.sum();
  return DensityMatrix(HermitianMatrix(
      s.basis * p.cast<Complex>().asDiagonal() * s.basis.adjoint()));
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Checks Φ(vv^*) >= 0 on basis states, their pairwise superpositions and a
// few seeded random vectors.
void require_positive(const SuperOp& phi) {
  const int n = phi.dim_in();
  std::vector<ComplexVector> probes;
  for (int a = 0; a < n; ++a) {
    probes.push_back(ComplexVector::Unit(n, a));
    for (int b = a + 1; b < n; ++b) {
      probes.push_back((ComplexVector::Unit(n, a) + ComplexVector::Unit(n, b)) /
                       std::sqrt(2.0));
      probes.push_back((ComplexVector::Unit(n, a) +
                        Complex(0.0, 1.0) * ComplexVector::Unit(n, b)) /
                       std::sqrt(2.0));
    }
  }
  Rng rng = make_rng(kPositivitySeed);
  for (int i = 0; i < 2 * n; ++i) probes.push_back(random_unit_vector(n, rng));
  for (const auto& v : probes) {
    const ComplexMatrix out = chandist::apply(phi, outer(v, v));
    const double scale = std::max(1.0, max_abs(out));
    if (hermiticity_defect(out) > kPositivityTol * scale) {
      throw DomainError("map is not positive: output is not Hermitian");
    }
    const RealVector ev = eigh(HermitianMatrix((out + out.adjoint()) / 2.0)).values;
    if (ev(ev.size() - 1) < -kPositivityTol * scale) {
      throw DomainError("map is not positive: output has eigenvalue " +
                        std::to_string(ev(ev.size() - 1)));
    }
  }
}

}  // namespace

ComplexMatrix hermitian_basis_element(int n, int index) {
  if (n < 1 || index < 0 || index >= n * n) {
    throw DimensionError("hermitian basis index " + std::to_string(index) +
                         " out of range for dimension " + std::to_string(n));
  }
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  if (index < n) {
    e(index, index) = 1.0;
    return e;
  }
  int offset = index - n;
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (offset == 0) {
        e(a, b) = s;
        e(b, a) = s;
        return e;
      }
      if (offset == 1) {
        e(a, b) = Complex(0.0, s);
        e(b, a) = Complex(0.0, -s);
        return e;
      }
      offset -= 2;
    }
  }
  return e;  // unreachable
}

RealVector hermitian_coordinates(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw DimensionError("hermitian_coordinates: matrix is not square");
  }
  const int n = static_cast<int>(h.rows());
  RealVector c(n * n);
  for (int a = 0; a < n; ++a) c(a) = h(a, a).real();
  const double s = std::sqrt(2.0);
  int i = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // Tr(B h) for the two off-diagonal basis elements of the pair.
      const Complex sum = h(a, b) + h(b, a);
      const Complex diff = h(b, a) - h(a, b);
      c(i++) = sum.real() / s;
      c(i++) = -diff.imag() / s;
    }
  }
  return c;
}

ComplexMatrix from_hermitian_coordinates(const RealVector& c, int n) {
  if (c.size() != static_cast<Eigen::Index>(n) * n) {
    throw DimensionError("from_hermitian_coordinates: expected " +
                         std::to_string(n * n) + " coordinates");
  }
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n * n; ++i) h += c(i) * hermitian_basis_element(n, i);
  return h;
}

RealVector RealLinearMap::operator()(const ComplexMatrix& x) const {
  return matrix * hermitian_coordinates(x);
}

RealLinearMap build_psi(const SuperOp& phi, const HermitianMatrix& p,
                        double tau) {
  if (p.dim() != phi.dim_out()) {
    throw DimensionError("build_psi: P has dimension " + std::to_string(p.dim()) +
                         ", map output is " + std::to_string(phi.dim_out()));
  }
  if (spectral_norm(p.matrix()) <= 1e-13) {
    throw DomainError("build_psi: P is zero");
  }
  const Support u = support_of(p.matrix(), tau);
  const int n = phi.dim_in();
  const int k = static_cast<int>(u.basis.cols());

  RealLinearMap psi;
  psi.domain_dim = n * n;
  psi.codomain_dim = k * k + 1;
  psi.range_basis = u.basis;
  psi.matrix.resize(psi.codomain_dim, psi.domain_dim);
  for (int i = 0; i < n * n; ++i) {
    const ComplexMatrix out = chandist::apply(phi, hermitian_basis_element(n, i));
    const ComplexMatrix inner = u.basis.adjoint() * out * u.basis;
    psi.matrix.col(i).head(k * k) = hermitian_coordinates(inner);
    psi.matrix(k * k, i) = (out.trace() - inner.trace()).real();
  }
  return psi;
}

std::vector<HermitianMatrix> kernel_directions(const RealLinearMap& psi,
                                               const DensityMatrix& rho,
                                               double tau) {
  if (static_cast<Eigen::Index>(rho.dim()) * rho.dim() != psi.domain_dim) {
    throw DimensionError("kernel_directions: state does not match map domain");
  }
  const Support s = support_of(rho.matrix(), tau);
  const int r = static_cast<int>(s.basis.cols());
  if (r <= 1) return {};

  // Columns: Ψ(V E_i V^*) stacked over Tr(E_i) for the basis E_i of Herm(C^r).
  RealMatrix stacked(psi.codomain_dim + 1, r * r);
  std::vector<ComplexMatrix> lifted;
  lifted.reserve(r * r);
  for (int i = 0; i < r * r; ++i) {
    const ComplexMatrix e = hermitian_basis_element(r, i);
    lifted.push_back(s.basis * e * s.basis.adjoint());
    stacked.col(i).head(psi.codomain_dim) = psi(lifted.back());
    stacked(psi.codomain_dim, i) = e.trace().real();
  }
  Eigen::JacobiSVD<RealMatrix> svd(stacked, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int numeric_rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kNullTol * scale) ++numeric_rank;
  }

  std::vector<HermitianMatrix> out;
  const RealMatrix& v = svd.matrixV();
  for (int col = r * r - 1; col >= numeric_rank; --col) {
    const RealVector c = v.col(col);
    if ((stacked * c).norm() > kKernelResidualTol * scale) continue;
    ComplexMatrix x = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (int i = 0; i < r * r; ++i) x += c(i) * lifted[i];
    out.emplace_back((x + x.adjoint()) / 2.0);
  }
  return out;
}

std::optional<HermitianMatrix> kernel_intersection(const RealLinearMap& psi,
                                                   const DensityMatrix& rho,
                                                   double tau) {
  auto all = kernel_directions(psi, rho, tau);
  if (all.empty()) return std::nullopt;
  return all.front();
}

DensityMatrix boundary_step(const DensityMatrix& rho, const HermitianMatrix& x,
                            double tau) {
  if (x.dim() != rho.dim()) {
    throw DimensionError("boundary_step: direction and state differ in dimension");
  }
  const double norm = x.matrix().norm();
  if (!(norm > 0.0)) throw DomainError("boundary_step: direction is zero");
  if (std::abs(x.matrix().trace().real()) > 1e-8 * norm) {
    throw DomainError("boundary_step: direction is not traceless");
  }
  const Support s = support_of(rho.matrix(), tau);
  const ComplexMatrix proj = s.basis * s.basis.adjoint();
  const ComplexMatrix outside = x.matrix() - proj * x.matrix() * proj;
  if (outside.norm() > 1e-8 * norm) {
    throw DomainError("boundary_step: direction leaves the support of the state");
  }
  const RealVector inv_sqrt = s.values.cwiseSqrt().cwiseInverse();
  const ComplexMatrix scaled = inv_sqrt.cast<Complex>().asDiagonal() *
                               (s.basis.adjoint() * x.matrix() * s.basis) *
                               inv_sqrt.cast<Complex>().asDiagonal();
  const RealVector ev = eigh(HermitianMatrix((scaled + scaled.adjoint()) / 2.0)).values;
  const double lowest = ev(ev.size() - 1);
  const double highest = ev(0);
  double t = 0.0;
  if (lowest < -kDegenerateTol) {
    t = 1.0 / -lowest;
  } else if (highest > kDegenerateTol) {
    t = -1.0 / highest;
  } else {
    throw DomainError("boundary_step: direction is degenerate in both signs");
  }
  return cleanup(rho.matrix() + t * x.matrix(), tau);
}

int density_rank(const DensityMatrix& rho, double tau) {
  return static_cast<int>(support_of(rho.matrix(), tau).basis.cols());
}

ReductionResult reduce_preimage(const SuperOp& phi, const DensityMatrix& rho0,
                                double tau) {
  if (rho0.dim() != phi.dim_in()) {
    throw DimensionError("reduce_preimage: state has dimension " +
                         std::to_string(rho0.dim()) + ", map input is " +
                         std::to_string(phi.dim_in()));
  }
  require_positive(phi);

  ReductionResult out;
  out.rank_before = density_rank(rho0, tau);
  const ComplexMatrix p = chandist::apply(phi, rho0.matrix());
  if (spectral_norm(p) <= 1e-13) {
    const EigenDecomposition e = eigh(rho0.hermitian());
    out.rho = DensityMatrix::pure(e.vectors.col(0));
    out.rank_after = 1;
    out.residual = (chandist::apply(phi, out.rho.matrix()) - p).norm();
    return out;
  }
  const HermitianMatrix ph((p + p.adjoint()) / 2.0);
  out.target_rank = static_cast<int>(support_of(ph.matrix(), tau).basis.cols());
  const RealLinearMap psi = build_psi(phi, ph, tau);

  DensityMatrix rho = cleanup(rho0.matrix(), tau);
  int rank = density_rank(rho, tau);
  for (int iter = 0; iter < phi.dim_in() && rank > out.target_rank; ++iter) {
    bool moved = false;
    for (const auto& x : kernel_directions(psi, rho, tau)) {
      DensityMatrix next;
      try {
        next = boundary_step(rho, x, tau);
      } catch (const DomainError&) {
        continue;  // degenerate; try the next kernel vector
      }
      const int next_rank = density_rank(next, tau);
      if (next_rank >= rank) continue;
      const double residual = (chandist::apply(phi, next.matrix()) - p).norm();
      const ComplexMatrix delta = next.matrix() - rho.matrix();
      const double t = delta.norm() / x.matrix().norm();
      out.trace.steps.push_back({rank, t, residual});
      rho = std::move(next);
      rank = next_rank;
      moved = true;
      break;
    }
    if (!moved) break;
  }

  out.rho = rho;
  out.rank_after = rank;
  out.residual = (chandist::apply(phi, rho.matrix()) - p).norm();
  if (out.residual > kOutputTol) {
    throw ConvergenceError("reduce_preimage: output drifted by " +
                           std::to_string(out.residual));
  }
  return out;
}

}  // namespace chandist
