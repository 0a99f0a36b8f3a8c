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

#include "chandist/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace chandist {

namespace {

void require_shape(const ComplexMatrix& m, int rows, int cols,
                   const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(what + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void require_positive_dims(int dim_in, int dim_out) {
  if (dim_in <= 0 || dim_out <= 0) {
    throw DimensionError("super-operator dimensions must be positive");
  }
}

}  // namespace

KrausRep::KrausRep(int dim_in, int dim_out, std::vector<KrausPair> pairs)
    : dim_in_(dim_in), dim_out_(dim_out), pairs_(std::move(pairs)) {
  require_positive_dims(dim_in, dim_out);
  cp_symmetric_ = true;
  for (std::size_t j = 0; j < pairs_.size(); ++j) {
    const std::string where = "Kraus pair " + std::to_string(j);
    require_shape(pairs_[j].left, dim_out, dim_in, where + " (A)");
    require_shape(pairs_[j].right, dim_out, dim_in, where + " (B)");
    if (pairs_[j].left != pairs_[j].right) cp_symmetric_ = false;
  }
}

KrausRep KrausRep::completely_positive(int dim_in, int dim_out,
                                       const std::vector<ComplexMatrix>& ops) {
  std::vector<KrausPair> pairs;
  pairs.reserve(ops.size());
  for (const auto& k : ops) pairs.push_back({k, k});
  return KrausRep(dim_in, dim_out, std::move(pairs));
}

ChoiRep::ChoiRep(int dim_in, int dim_out, ComplexMatrix j)
    : dim_in_(dim_in), dim_out_(dim_out), j_(std::move(j)) {
  require_positive_dims(dim_in, dim_out);
  require_shape(j_, dim_in * dim_out, dim_in * dim_out, "Choi matrix");
}

StinespringRep::StinespringRep(int dim_in, int dim_out, int dim_env,
                               ComplexMatrix left, ComplexMatrix right)
    : dim_in_(dim_in),
      dim_out_(dim_out),
      dim_env_(dim_env),
      a_(std::move(left)),
      b_(std::move(right)) {
  require_positive_dims(dim_in, dim_out);
  if (dim_env < 0) throw DimensionError("negative environment dimension");
  require_shape(a_, dim_out * dim_env, dim_in, "Stinespring operator A");
  require_shape(b_, dim_out * dim_env, dim_in, "Stinespring operator B");
}

SuperOp::SuperOp(KrausRep kraus)
    : origin_(Representation::kraus),
      kraus_(std::move(kraus)),
      choi_(choi_from_kraus(kraus_)),
      stinespring_(stinespring_from_kraus(kraus_)) {}

SuperOp::SuperOp(ChoiRep choi, double tau)
    : origin_(Representation::choi),
      kraus_(kraus_from_choi(choi, tau)),
      choi_(std::move(choi)),
      stinespring_(stinespring_from_kraus(kraus_)) {}

SuperOp::SuperOp(StinespringRep stinespring)
    : origin_(Representation::stinespring),
      kraus_(kraus_from_stinespring(stinespring)),
      choi_(choi_from_kraus(kraus_)),
      stinespring_(std::move(stinespring)) {}

int SuperOp::choi_rank(double tau) const { return rank_eps(choi_.matrix(), tau); }

ComplexVector vec(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  for (Eigen::Index y = 0; y < a.rows(); ++y) {
    for (Eigen::Index x = 0; x < a.cols(); ++x) {
      v(y * a.cols() + x) = a(y, x);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw DimensionError("unvec: vector length does not match shape");
  }
  ComplexMatrix a(rows, cols);
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) a(y, x) = v(y * cols + x);
  }
  return a;
}

ChoiRep choi_from_kraus(const KrausRep& k) {
  const int d = k.dim_in() * k.dim_out();
  ComplexMatrix j = ComplexMatrix::Zero(d, d);
  for (const auto& p : k.pairs()) {
    j += vec(p.left) * vec(p.right).adjoint();
  }
  return ChoiRep(k.dim_in(), k.dim_out(), std::move(j));
}

KrausRep kraus_from_choi(const ChoiRep& c, double tau) {
  const int n_in = c.dim_in();
  const int n_out = c.dim_out();
  const ComplexMatrix& j = c.matrix();
  std::vector<KrausPair> pairs;
  const double scale = j.cwiseAbs().maxCoeff();
  if (scale == 0.0) return KrausRep(n_in, n_out, {});

  if (hermiticity_defect(j) <= 1e-10 * std::max(1.0, scale)) {
    const EigenDecomposition e = eigh(HermitianMatrix(j));
    const double top = e.values.cwiseAbs().maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
      if (std::abs(e.values(i)) > tau * top) keep.push_back(i);
    }
    std::stable_sort(keep.begin(), keep.end(), [&](Eigen::Index a, Eigen::Index b) {
      return std::abs(e.values(a)) > std::abs(e.values(b));
    });
    for (Eigen::Index i : keep) {
      const double lam = e.values(i);
      const ComplexMatrix a =
          unvec(std::sqrt(std::abs(lam)) * e.vectors.col(i), n_out, n_in);
      pairs.push_back({a, lam > 0.0 ? a : ComplexMatrix(-a)});
    }
    return KrausRep(n_in, n_out, std::move(pairs));
  }

  const SingularValueDecomposition f = svd(j);
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    if (!(f.values(i) > tau * f.values(0))) break;
    const double w = std::sqrt(f.values(i));
    pairs.push_back({unvec(w * f.u.col(i), n_out, n_in),
                     unvec(w * f.v.col(i), n_out, n_in)});
  }
  return KrausRep(n_in, n_out, std::move(pairs));
}

StinespringRep stinespring_from_kraus(const KrausRep& k) {
  const int env = k.size();
  const int n_out = k.dim_out();
  ComplexMatrix a(n_out * env, k.dim_in());
  ComplexMatrix b(n_out * env, k.dim_in());
  for (int y = 0; y < n_out; ++y) {
    for (int j = 0; j < env; ++j) {
      a.row(y * env + j) = k.pairs()[j].left.row(y);
      b.row(y * env + j) = k.pairs()[j].right.row(y);
    }
  }
  return StinespringRep(k.dim_in(), n_out, env, std::move(a), std::move(b));
}

KrausRep kraus_from_stinespring(const StinespringRep& s) {
  const int env = s.dim_env();
  std::vector<KrausPair> pairs(
      env, {ComplexMatrix(s.dim_out(), s.dim_in()),
            ComplexMatrix(s.dim_out(), s.dim_in())});
  for (int y = 0; y < s.dim_out(); ++y) {
    for (int j = 0; j < env; ++j) {
      pairs[j].left.row(y) = s.left().row(y * env + j);
      pairs[j].right.row(y) = s.right().row(y * env + j);
    }
  }
  return KrausRep(s.dim_in(), s.dim_out(), std::move(pairs));
}

ComplexMatrix apply(const KrausRep& k, const ComplexMatrix& x) {
  require_shape(x, k.dim_in(), k.dim_in(), "super-operator input");
  ComplexMatrix out = ComplexMatrix::Zero(k.dim_out(), k.dim_out());
  for (const auto& p : k.pairs()) {
    out += p.left * x * p.right.adjoint();
  }
  return out;
}

ComplexMatrix apply(const SuperOp& phi, const ComplexMatrix& x) {
  return chandist::apply(phi.kraus(), x);
}

ComplexMatrix apply(const SuperOp& phi, const ComplexMatrix& x,
                    Representation route) {
  require_shape(x, phi.dim_in(), phi.dim_in(), "super-operator input");
  switch (route) {
    case Representation::kraus:
      return chandist::apply(phi.kraus(), x);
    case Representation::choi: {
      // Φ(X) = Tr_X[J (1_Y ⊗ X^T)]
      const ComplexMatrix id = ComplexMatrix::Identity(phi.dim_out(), phi.dim_out());
      const ComplexMatrix prod =
          phi.choi().matrix() * tensor_product(id, x.transpose());
      return partial_trace(prod, phi.dim_out(), phi.dim_in(), Subsystem::B);
    }
    case Representation::stinespring: {
      const StinespringRep& s = phi.stinespring();
      if (s.dim_env() == 0) {
        return ComplexMatrix::Zero(phi.dim_out(), phi.dim_out());
      }
      return partial_trace(s.left() * x * s.right().adjoint(), s.dim_out(),
                           s.dim_env(), Subsystem::B);
    }
  }
  throw Error("unknown representation");
}

ComplexMatrix apply_extended(const SuperOp& phi, const ComplexMatrix& x,
                             int ancilla_dim) {
  const int n_in = phi.dim_in() * ancilla_dim;
  const int n_out = phi.dim_out() * ancilla_dim;
  require_shape(x, n_in, n_in, "extended super-operator input");
  // Φ acts on each strided block X[a*W + r, b*W + s] for ancilla pair (r, s).
  ComplexMatrix out = ComplexMatrix::Zero(n_out, n_out);
  const int w = ancilla_dim;
  ComplexMatrix block(phi.dim_in(), phi.dim_in());
  for (int r = 0; r < w; ++r) {
    for (int s = 0; s < w; ++s) {
      for (int a = 0; a < phi.dim_in(); ++a) {
        for (int b = 0; b < phi.dim_in(); ++b) block(a, b) = x(a * w + r, b * w + s);
      }
      const ComplexMatrix image = chandist::apply(phi.kraus(), block);
      for (int y = 0; y < phi.dim_out(); ++y) {
        for (int z = 0; z < phi.dim_out(); ++z) out(y * w + r, z * w + s) = image(y, z);
      }
    }
  }
  return out;
}

ComplexMatrix apply_adjoint(const SuperOp& phi, const ComplexMatrix& y) {
  require_shape(y, phi.dim_out(), phi.dim_out(), "adjoint input");
  ComplexMatrix out = ComplexMatrix::Zero(phi.dim_in(), phi.dim_in());
  for (const auto& p : phi.kraus().pairs()) {
    out += p.left.adjoint() * y * p.right;
  }
  return out;
}

SuperOp tensor_identity(const SuperOp& phi, int ancilla_dim) {
  if (ancilla_dim <= 0) throw DimensionError("ancilla dimension must be positive");
  const ComplexMatrix id = ComplexMatrix::Identity(ancilla_dim, ancilla_dim);
  std::vector<KrausPair> pairs;
  pairs.reserve(phi.kraus().size());
  for (const auto& p : phi.kraus().pairs()) {
    pairs.push_back({tensor_product(p.left, id), tensor_product(p.right, id)});
  }
  return SuperOp(KrausRep(phi.dim_in() * ancilla_dim,
                          phi.dim_out() * ancilla_dim, std::move(pairs)));
}

std::pair<SuperOp, SuperOp> complementary_pair(const StinespringRep& s) {
  const int env = s.dim_env();
  if (env == 0) {
    throw DimensionError("complementary_pair: environment is trivial (zero map)");
  }
  std::vector<ComplexMatrix> ka(s.dim_out(), ComplexMatrix(env, s.dim_in()));
  std::vector<ComplexMatrix> kb(s.dim_out(), ComplexMatrix(env, s.dim_in()));
  for (int y = 0; y < s.dim_out(); ++y) {
    ka[y] = s.left().middleRows(y * env, env);
    kb[y] = s.right().middleRows(y * env, env);
  }
  return {SuperOp(KrausRep::completely_positive(s.dim_in(), env, ka)),
          SuperOp(KrausRep::completely_positive(s.dim_in(), env, kb))};
}

SuperOp difference(const SuperOp& phi0, const SuperOp& phi1, double tau) {
  if (phi0.dim_in() != phi1.dim_in() || phi0.dim_out() != phi1.dim_out()) {
    throw DimensionError("difference: super-operators have different dimensions");
  }
  return SuperOp(ChoiRep(phi0.dim_in(), phi0.dim_out(),
                         phi0.choi().matrix() - phi1.choi().matrix()),
                 tau);
}

SuperOp adjoint(const SuperOp& phi) {
  std::vector<KrausPair> pairs;
  pairs.reserve(phi.kraus().size());
  for (const auto& p : phi.kraus().pairs()) {
    pairs.push_back({p.left.adjoint(), p.right.adjoint()});
  }
  return SuperOp(KrausRep(phi.dim_out(), phi.dim_in(), std::move(pairs)));
}

bool is_cp(const SuperOp& phi, double tol) {
  const ComplexMatrix& j = phi.choi().matrix();
  const double scale = std::max(1.0, j.cwiseAbs().maxCoeff());
  if (hermiticity_defect(j) > tol * scale) return false;
  const EigenDecomposition e = eigh(HermitianMatrix(j));
  return e.values(e.values.size() - 1) >= -tol;
}

bool is_trace_preserving(const SuperOp& phi, double tol) {
  ComplexMatrix sum = ComplexMatrix::Zero(phi.dim_in(), phi.dim_in());
  for (const auto& p : phi.kraus().pairs()) sum += p.right.adjoint() * p.left;
  const ComplexMatrix id = ComplexMatrix::Identity(phi.dim_in(), phi.dim_in());
  return (sum - id).cwiseAbs().maxCoeff() <= tol;
}

SuperOp identity_channel(int n) {
  return SuperOp(KrausRep::completely_positive(
      n, n, {ComplexMatrix::Identity(n, n)}));
}

SuperOp transpose_map(int n) {
  return SuperOp(ChoiRep(n, n, swap_and_projectors(n).swap));
}

SuperOp unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitary must be square");
  const int n = static_cast<int>(u.rows());
  return SuperOp(KrausRep::completely_positive(n, n, {u}));
}

}  // namespace chandist
