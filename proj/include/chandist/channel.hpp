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

#include <utility>
#include <vector>

#include "chandist/numerics.hpp"

// Super-operators Φ: L(X) -> L(Y) in Kraus, Choi and Stinespring form.
//
// Conventions:
//   Choi     J(Φ) = Σ_{a,b} Φ(|a><b|) ⊗ |a><b|   (output factor first)
//   vec      vec(A) = Σ_a (A|a>) ⊗ |a>, so vec(A)[y * dim_in + a] = A(y, a),
//            and J = Σ_j vec(A_j) vec(B_j)^* for Φ(X) = Σ_j A_j X B_j^*.
//   Stinespring  A = Σ_j A_j ⊗ |j>, an operator X -> Y ⊗ Z with row index
//            y * dim_env + j, and Φ(X) = Tr_Z(A X B^*).
//
// Worked 2x2 example: A = [[1, 2], [3, 4]] gives vec(A) = (1, 2, 3, 4).

namespace chandist {

/// One term A X B^* of a Kraus representation.
struct KrausPair {
  ComplexMatrix left;   // A_j, dim_out x dim_in
  ComplexMatrix right;  // B_j, dim_out x dim_in
};

class KrausRep {
 public:
  KrausRep(int dim_in, int dim_out, std::vector<KrausPair> pairs);

  /// Φ(X) = Σ_j K_j X K_j^*.
  static KrausRep completely_positive(int dim_in, int dim_out,
                                      const std::vector<ComplexMatrix>& ops);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<KrausPair>& pairs() const { return pairs_; }
  /// True when every pair has A_j = B_j (exactly).
  bool cp_symmetric() const { return cp_symmetric_; }

 private:
  int dim_in_;
  int dim_out_;
  std::vector<KrausPair> pairs_;
  bool cp_symmetric_;
};

class ChoiRep {
 public:
  ChoiRep(int dim_in, int dim_out, ComplexMatrix j);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const ComplexMatrix& matrix() const { return j_; }

 private:
  int dim_in_;
  int dim_out_;
  ComplexMatrix j_;
};

class StinespringRep {
 public:
  StinespringRep(int dim_in, int dim_out, int dim_env, ComplexMatrix left,
                 ComplexMatrix right);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  int dim_env() const { return dim_env_; }
  const ComplexMatrix& left() const { return a_; }
  const ComplexMatrix& right() const { return b_; }

 private:
  int dim_in_;
  int dim_out_;
  int dim_env_;
  ComplexMatrix a_;
  ComplexMatrix b_;
};

enum class Representation { kraus, choi, stinespring };

/// A super-operator holding all three representations. The one it was built
/// from is kept verbatim; the others are derived eagerly at construction so
/// the value is immutable afterwards.
class SuperOp {
 public:
  explicit SuperOp(KrausRep kraus);
  /// Kraus and Stinespring forms are the minimal ones from kraus_from_choi.
  explicit SuperOp(ChoiRep choi, double tau = kDefaultRankTol);
  explicit SuperOp(StinespringRep stinespring);

  int dim_in() const { return kraus_.dim_in(); }
  int dim_out() const { return kraus_.dim_out(); }
  Representation origin() const { return origin_; }

  const KrausRep& kraus() const { return kraus_; }
  const ChoiRep& choi() const { return choi_; }
  const StinespringRep& stinespring() const { return stinespring_; }

  int choi_rank(double tau = kDefaultRankTol) const;

 private:
  Representation origin_;
  KrausRep kraus_;
  ChoiRep choi_;
  StinespringRep stinespring_;
};

ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& v, int rows, int cols);

ChoiRep choi_from_kraus(const KrausRep& k);
/// Minimal Kraus form with rank_eps(J, tau) pairs. PSD J gives A_j = B_j;
/// Hermitian J gives B_j = ±A_j from a signed eigendecomposition; anything
/// else is factored through the SVD.
KrausRep kraus_from_choi(const ChoiRep& c, double tau = kDefaultRankTol);
StinespringRep stinespring_from_kraus(const KrausRep& k);
KrausRep kraus_from_stinespring(const StinespringRep& s);

ComplexMatrix apply(const SuperOp& phi, const ComplexMatrix& x);
/// Evaluates through one specific stored representation.
ComplexMatrix apply(const SuperOp& phi, const ComplexMatrix& x,
                    Representation route);
ComplexMatrix apply(const KrausRep& k, const ComplexMatrix& x);
/// (Φ ⊗ 1_W)(X) for X on X ⊗ W with dim(W) = ancilla_dim.
ComplexMatrix apply_extended(const SuperOp& phi, const ComplexMatrix& x,
                             int ancilla_dim);
/// Φ† applied to Y (Hilbert–Schmidt adjoint).
ComplexMatrix apply_adjoint(const SuperOp& phi, const ComplexMatrix& y);

/// Φ ⊗ 1_{L(W)} as a super-operator on X ⊗ W.
SuperOp tensor_identity(const SuperOp& phi, int ancilla_dim);

/// (Ψ_A, Ψ_B) with Ψ_A(X) = Tr_Y(A X A^*), Ψ_B(X) = Tr_Y(B X B^*), both
/// mapping L(X) to L(Z).
std::pair<SuperOp, SuperOp> complementary_pair(const StinespringRep& s);

/// Φ0 - Φ1, built from the Choi difference so its Kraus and Stinespring forms
/// are minimal (dim_env = Choi rank).
SuperOp difference(const SuperOp& phi0, const SuperOp& phi1,
                   double tau = kDefaultRankTol);

SuperOp adjoint(const SuperOp& phi);

/// Choi matrix Hermitian with minimum eigenvalue >= -tol.
bool is_cp(const SuperOp& phi, double tol = 1e-9);
/// Σ_j B_j^* A_j = I within tol (entrywise).
bool is_trace_preserving(const SuperOp& phi, double tol = 1e-9);

SuperOp identity_channel(int n);
/// X -> X^T in the standard basis.
SuperOp transpose_map(int n);
/// X -> U X U^*.
SuperOp unitary_channel(const ComplexMatrix& u);

}  // namespace chandist
