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

#include "chandist/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace chandist {

namespace {

constexpr double kClipTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kSqrtRejectTol = 1e-8;
constexpr double kUnitTol = 1e-12;

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix reconstruct(const ComplexMatrix& vecs, const RealVector& vals) {
  return vecs * vals.cast<Complex>().asDiagonal() * vecs.adjoint();
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("Hermitian matrix must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (!all_finite(m)) {
    throw DomainError("matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(m);
  if (defect > 1e-8 * std::max(1.0, max_abs(m))) {
    throw DomainError("matrix is not Hermitian (defect " +
                      std::to_string(defect) + ")");
  }
  m_ = (m + m.adjoint()) / 2.0;
}

DensityMatrix::DensityMatrix(const HermitianMatrix& h) {
  const EigenDecomposition e = eigh(h);
  const Eigen::Index n = e.values.size();
  if (n == 0) {
    throw DimensionError("density matrix must have positive dimension");
  }
  if (e.values(n - 1) < -kClipTol) {
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(e.values(n - 1)));
  }
  const double tr = h.matrix().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw DomainError("density matrix trace is " + std::to_string(tr));
  }
  if (e.values(n - 1) < 0.0) {
    RealVector clipped = e.values.cwiseMax(0.0);
    clipped /= clipped.sum();
    h_ = HermitianMatrix(reconstruct(e.vectors, clipped));
  } else {
    h_ = h;
  }
}

DensityMatrix DensityMatrix::normalized(const ComplexMatrix& m) {
  const double tr = m.trace().real();
  if (!(tr > 0.0)) {
    throw DomainError("cannot normalize an operator with trace " +
                      std::to_string(tr));
  }
  return DensityMatrix(HermitianMatrix(m / tr));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& v) {
  const UnitVector u(v);
  return DensityMatrix(HermitianMatrix(outer(u.vector(), u.vector())));
}

UnitVector::UnitVector(const ComplexVector& v) : v_(v) {
  if (v.size() == 0) {
    throw DimensionError("unit vector must have positive dimension");
  }
  if (std::abs(v.norm() - 1.0) > kUnitTol) {
    throw DomainError("vector norm is " + std::to_string(v.norm()) +
                      ", expected 1");
  }
}

UnitVector UnitVector::normalize(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  return UnitVector(v / n);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem which) {
  if (dim_a <= 0 || dim_b <= 0 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionError("partial_trace: operator of size " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " does not act on " +
                         std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
  if (which == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return out;
}

EigenDecomposition eigh(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigh: eigenvalue iteration did not converge");
  }
  EigenDecomposition out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

SingularValueDecomposition svd(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> solver(a,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("svd: singular value iteration did not converge");
  }
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

RealVector singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("svd: singular value iteration did not converge");
  }
  return solver.singularValues();
}

double trace_norm(const ComplexMatrix& a) { return singular_values(a).sum(); }

double spectral_norm(const ComplexMatrix& a) {
  const RealVector s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

HermitianMatrix sqrtm_psd(const HermitianMatrix& p) {
  const EigenDecomposition e = eigh(p);
  if (e.values.size() == 0) return p;
  const double scale = std::max(1.0, std::abs(e.values(0)));
  const double lowest = e.values(e.values.size() - 1);
  if (lowest < -kSqrtRejectTol * scale) {
    throw DomainError("sqrtm_psd: operator has negative eigenvalue " +
                      std::to_string(lowest));
  }
  // Eigenvalues at roundoff level would otherwise contribute their square
  // roots, which are far above roundoff.
  const double floor = 16.0 * e.values.size() *
                       std::numeric_limits<double>::epsilon() * std::max(e.values(0), 0.0);
  RealVector roots = e.values.cwiseSqrt();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    if (!(e.values(i) > floor)) roots(i) = 0.0;
  }
  return HermitianMatrix(reconstruct(e.vectors, roots));
}

double fidelity(const HermitianMatrix& p, const HermitianMatrix& q) {
  if (p.dim() != q.dim()) {
    throw DimensionError("fidelity: operands have dimensions " +
                         std::to_string(p.dim()) + " and " +
                         std::to_string(q.dim()));
  }
  return trace_norm(sqrtm_psd(p).matrix() * sqrtm_psd(q).matrix());
}

UnitVector purify(const DensityMatrix& rho, int ancilla_dim, double tau) {
  const EigenDecomposition e = eigh(rho.hermitian());
  const int n = rho.dim();
  const double top = e.values(0);
  int r = 0;
  while (r < n && e.values(r) > tau * top) ++r;
  if (ancilla_dim < r) {
    throw DimensionError("purify: ancilla dimension " +
                         std::to_string(ancilla_dim) + " is below rank " +
                         std::to_string(r));
  }
  ComplexVector u = ComplexVector::Zero(static_cast<Eigen::Index>(n) * ancilla_dim);
  for (int i = 0; i < r; ++i) {
    const double w = std::sqrt(e.values(i));
    for (int x = 0; x < n; ++x) {
      u(static_cast<Eigen::Index>(x) * ancilla_dim + i) = w * e.vectors(x, i);
    }
  }
  return UnitVector::normalize(u);
}

int rank_eps(const ComplexMatrix& a, double tau) {
  if (!(tau > 0.0)) throw DomainError("rank_eps: tau must be positive");
  const RealVector s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tau * s(0)) ++r;
  }
  return r;
}

SwapProjectors swap_and_projectors(int n) {
  if (n < 1) throw DomainError("swap_and_projectors: n must be >= 1");
  const int d = n * n;
  ComplexMatrix swap = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      swap(b * n + a, a * n + b) = 1.0;
    }
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return {swap, (id + swap) / 2.0, (id - swap) / 2.0};
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermiticity_defect: matrix is not square");
  }
  return max_abs(m - m.adjoint());
}

ComplexMatrix project_to_density(const ComplexMatrix& h) {
  const EigenDecomposition e = eigh(HermitianMatrix(h));
  const Eigen::Index n = e.values.size();
  // Euclidean projection of a descending vector onto the simplex.
  double running = 0.0;
  double theta = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    running += e.values(i);
    const double t = (running - 1.0) / static_cast<double>(i + 1);
    if (e.values(i) - t > 0.0) theta = t;
  }
  const RealVector p = (e.values.array() - theta).cwiseMax(0.0);
  return reconstruct(e.vectors, p / p.sum());
}

ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v) {
  return u * v.adjoint();
}

}  // namespace chandist
