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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

// Dense complex linear algebra shared by every other module.
//
// Tensor index convention: for a composite space X (x) Y the basis vector
// |x>|y> has index x * dim(Y) + y, i.e. the first factor is the high-order
// index. Every tensor product, partial trace and ancilla extension in the
// library follows this convention.

namespace chandist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Relative singular-value threshold used for every numerical rank.
inline constexpr double kDefaultRankTol = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a mathematical precondition (positivity, trace, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Square matrix equal to its adjoint. Construction symmetrizes
/// M <- (M + M^*)/2 and rejects inputs that are far from Hermitian.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Positive semidefinite, unit-trace operator. Eigenvalues in [-1e-10, 0)
/// are clipped to zero; anything more negative is rejected, as is a trace
/// further than 1e-10 from one.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(const HermitianMatrix& h);
  explicit DensityMatrix(const ComplexMatrix& m)
      : DensityMatrix(HermitianMatrix(m)) {}

  /// Divides a nonzero PSD operator by its trace before validating.
  static DensityMatrix normalized(const ComplexMatrix& m);
  /// The pure state vv^* for a unit vector v.
  static DensityMatrix pure(const ComplexVector& v);

  int dim() const { return h_.dim(); }
  const ComplexMatrix& matrix() const { return h_.matrix(); }
  const HermitianMatrix& hermitian() const { return h_; }
  operator const ComplexMatrix&() const { return h_.matrix(); }

 private:
  HermitianMatrix h_;
};

/// Vector on the unit sphere, |‖v‖ - 1| <= 1e-12.
class UnitVector {
 public:
  UnitVector() = default;
  explicit UnitVector(const ComplexVector& v);

  /// Rescales a nonzero vector onto the sphere.
  static UnitVector normalize(const ComplexVector& v);

  int dim() const { return static_cast<int>(v_.size()); }
  const ComplexVector& vector() const { return v_; }
  operator const ComplexVector&() const { return v_; }

 private:
  ComplexVector v_;
};

struct EigenDecomposition {
  RealVector values;      // descending
  ComplexMatrix vectors;  // orthonormal columns, matched to values
};

struct SingularValueDecomposition {
  ComplexMatrix u;
  RealVector values;  // descending
  ComplexMatrix v;    // A = U diag(values) V^*
};

enum class Subsystem { A, B };

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// Traces out `which` from an operator on A (x) B.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem which);

EigenDecomposition eigh(const HermitianMatrix& h);
SingularValueDecomposition svd(const ComplexMatrix& a);
RealVector singular_values(const ComplexMatrix& a);

double trace_norm(const ComplexMatrix& a);
double spectral_norm(const ComplexMatrix& a);

/// Principal square root of a PSD operator. Eigenvalues below
/// -1e-8 * max(1, ‖P‖) raise DomainError; smaller negative ones are clipped.
HermitianMatrix sqrtm_psd(const HermitianMatrix& p);

/// F(P, Q) = ‖√P √Q‖₁ for positive semidefinite P, Q.
double fidelity(const HermitianMatrix& p, const HermitianMatrix& q);

/// Schmidt-form purification u = Σ √p_i x_i ⊗ w_i with standard-basis w_i,
/// on X ⊗ W with dim(W) = ancilla_dim.
UnitVector purify(const DensityMatrix& rho, int ancilla_dim,
                  double tau = kDefaultRankTol);

/// Number of singular values above tau * s_max (zero for the zero matrix).
int rank_eps(const ComplexMatrix& a, double tau = kDefaultRankTol);

struct SwapProjectors {
  ComplexMatrix swap;
  ComplexMatrix symmetric;
  ComplexMatrix antisymmetric;
};

/// SWAP on C^n ⊗ C^n with the projectors (I ± SWAP)/2.
SwapProjectors swap_and_projectors(int n);

// Small helpers used across modules.

/// Largest absolute entry of M - M^*.
double hermiticity_defect(const ComplexMatrix& m);
/// Projects the eigenvalues of a Hermitian operator onto the probability
/// simplex, giving the Frobenius-nearest density operator.
ComplexMatrix project_to_density(const ComplexMatrix& h);
ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

}  // namespace chandist
