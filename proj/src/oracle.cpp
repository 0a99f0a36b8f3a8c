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

#include "chandist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "chandist/random.hpp"
#include "restarts.hpp"

namespace chandist::oracle {

namespace {

constexpr std::uint64_t kDnormStream = 0x42444e4d;  // "BDNM"
constexpr std::uint64_t kFmaxStream = 0x42464d58;   // "BFMX"
constexpr int kAscentIters = 200;
// Fidelity has unbounded gradients near pure optima, so the ascent crawls there.
constexpr int kFidelityAscentIters = 5000;

// Objective value with its gradients in u and v.
struct Evaluation {
  double value = 0.0;
  ComplexVector grad_u;
  ComplexVector grad_v;
};

using Objective = std::function<Evaluation(const ComplexVector&, const ComplexVector&)>;

ComplexVector tangent(const ComplexVector& x, const ComplexVector& g) {
  return g - x * x.dot(g);
}

// Gradient ascent on S x S: step along the tangent gradient, renormalize,
// halve the step until the value improves. Leaves the final point in (u, v).
double sphere_ascent(const Objective& f, ComplexVector& u, ComplexVector& v,
                     int max_iters = kAscentIters) {
  Evaluation cur = f(u, v);
  double eta = 1.0;
  int stalls = 0;
  for (int it = 0; it < max_iters && stalls < 30; ++it) {
    const ComplexVector tu = tangent(u, cur.grad_u);
    const ComplexVector tv = tangent(v, cur.grad_v);
    const double g2 = tu.squaredNorm() + tv.squaredNorm();
    if (g2 < 1e-24) break;
    bool accepted = false;
    while (eta > 1e-14) {
      const ComplexVector nu = (u + eta * tu).normalized();
      const ComplexVector nv = (v + eta * tv).normalized();
      Evaluation next = f(nu, nv);
      if (next.value > cur.value + 1e-4 * eta * g2) {
        stalls = next.value - cur.value < 1e-13 ? stalls + 1 : 0;
        u = nu;
        v = nv;
        cur = std::move(next);
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;
    eta = std::min(2.0 * eta, 16.0);
  }
  return cur.value;
}

std::vector<KrausPair> extended_pairs(const SuperOp& phi, int ancilla) {
  const ComplexMatrix id = ComplexMatrix::Identity(ancilla, ancilla);
  std::vector<KrausPair> out;
  for (const auto& p : phi.kraus().pairs()) {
    out.push_back({tensor_product(p.left, id), tensor_product(p.right, id)});
  }
  return out;
}

// ‖Σ_j (A_j u)(B_j v)^*‖₁ = max_U Re Tr(U M), returned with K = Σ_j B_j^* U A_j
// at the maximizing U; the gradient in u is K^* v and in v is K u.
struct TraceNormTerm {
  double value = 0.0;
  ComplexMatrix k;
};

TraceNormTerm tnorm_term(const std::vector<KrausPair>& pairs,
                         const ComplexVector& u, const ComplexVector& v) {
  const Eigen::Index m = pairs.front().left.rows();
  ComplexMatrix image = ComplexMatrix::Zero(m, m);
  for (const auto& p : pairs) image += (p.left * u) * (p.right * v).adjoint();
  Eigen::JacobiSVD<ComplexMatrix> svd(image, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const ComplexMatrix polar = svd.matrixV() * svd.matrixU().adjoint();
  TraceNormTerm out{svd.singularValues().sum(), ComplexMatrix::Zero(u.size(), u.size())};
  for (const auto& p : pairs) out.k += p.right.adjoint() * polar * p.left;
  return out;
}

Evaluation tnorm_objective(const std::vector<KrausPair>& pairs,
                           const ComplexVector& u, const ComplexVector& v) {
  const TraceNormTerm t = tnorm_term(pairs, u, v);
  return {t.value, t.k.adjoint() * v, t.k * u};
}

// Eigen-based helpers kept local so the oracle does not lean on the library's
// fidelity code.
ComplexMatrix psd_power(const ComplexMatrix& h, double power, double eps) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((h + h.adjoint()) / 2.0);
  RealVector d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d(i) = std::pow(std::max(d(i), 0.0) + eps, power);
  }
  return es.eigenvectors() * d.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix apply_pairs(const std::vector<KrausPair>& pairs, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(pairs.front().left.rows(), pairs.front().left.rows());
  for (const auto& p : pairs) out += p.left * x * p.right.adjoint();
  return out;
}

ComplexMatrix adjoint_pairs(const std::vector<KrausPair>& pairs, const ComplexMatrix& y) {
  ComplexMatrix out = ComplexMatrix::Zero(pairs.front().left.cols(), pairs.front().left.cols());
  for (const auto& p : pairs) out += p.left.adjoint() * y * p.right;
  return out;
}

// F(P, Q) = Tr sqrt(sqrt(Q) P sqrt(Q)), with dF/dP = ½ sqrt(Q) M^{-1/2} sqrt(Q)
// for M = sqrt(Q) P sqrt(Q), regularized by a tiny shift.
Evaluation fidelity_objective(const std::vector<KrausPair>& a,
                              const std::vector<KrausPair>& b, int n,
                              const ComplexVector& u, const ComplexVector& v) {
  const ComplexMatrix rho1 = partial_trace(u * u.adjoint(), n, n, Subsystem::B);
  const ComplexMatrix rho2 = partial_trace(v * v.adjoint(), n, n, Subsystem::B);
  const ComplexMatrix p = apply_pairs(a, rho1);
  const ComplexMatrix q = apply_pairs(b, rho2);
  const double eps = 1e-14;
  const ComplexMatrix sp = psd_power(p, 0.5, 0.0);
  const ComplexMatrix sq = psd_power(q, 0.5, 0.0);
  const ComplexMatrix mq = sq * p * sq;
  const ComplexMatrix mp = sp * q * sp;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((mq + mq.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  double value = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    value += std::sqrt(std::max(es.eigenvalues()(i), 0.0));
  }
  const ComplexMatrix gp = 0.5 * sq * psd_power(mq, -0.5, eps) * sq;
  const ComplexMatrix gq = 0.5 * sp * psd_power(mp, -0.5, eps) * sp;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix hu = tensor_product(adjoint_pairs(a, gp), id);
  const ComplexMatrix hv = tensor_product(adjoint_pairs(b, gq), id);
  return {value, 2.0 * (hu * u), 2.0 * (hv * v)};
}

double best_of(const std::vector<double>& values) {
  return *std::max_element(values.begin(), values.end());
}

}  // namespace

double brute_dnorm(const SuperOp& phi, int restarts, std::uint64_t seed, int threads) {
  const int n = phi.dim_in();
  if (n > kDnormMaxDim) {
    throw DimensionError("brute_dnorm: input dimension " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(kDnormMaxDim));
  }
  if (restarts < 1) throw DomainError("brute_dnorm: restarts must be >= 1");
  if (phi.kraus().size() == 0) return 0.0;
  const auto pairs = extended_pairs(phi, n);
  const Objective f = [&](const ComplexVector& u, const ComplexVector& v) {
    return tnorm_objective(pairs, u, v);
  };
  const auto values = detail::run_restarts<double>(restarts, threads, [&](int r) {
    Rng rng = make_rng(seed, kDnormStream, r);
    ComplexVector u = random_unit_vector(n * n, rng);
    ComplexVector v = random_unit_vector(n * n, rng);
    double value = sphere_ascent(f, u, v);
    // The trace norm is not smooth where the image is rank deficient, so
    // finish with exact block updates: top singular pair of K.
    for (int it = 0; it < 1000; ++it) {
      const TraceNormTerm t = tnorm_term(pairs, u, v);
      value = std::max(value, t.value);
      Eigen::JacobiSVD<ComplexMatrix> ks(t.k, Eigen::ComputeFullU | Eigen::ComputeFullV);
      if (ks.singularValues()(0) <= t.value * (1.0 + 1e-11)) break;
      u = ks.matrixV().col(0);
      v = ks.matrixU().col(0);
    }
    return value;
  });
  return best_of(values);
}

double brute_fmax(const SuperOp& psi_a, const SuperOp& psi_b, int restarts,
                  std::uint64_t seed, int threads) {
  const int n = psi_a.dim_in();
  if (n > kFmaxMaxDim) {
    throw DimensionError("brute_fmax: input dimension " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(kFmaxMaxDim));
  }
  if (psi_b.dim_in() != n || psi_a.dim_out() != psi_b.dim_out()) {
    throw DimensionError("brute_fmax: maps have different dimensions");
  }
  if (!is_cp(psi_a) || !is_cp(psi_b)) {
    throw DomainError("brute_fmax: maps must be completely positive");
  }
  if (restarts < 1) throw DomainError("brute_fmax: restarts must be >= 1");
  const auto& a = psi_a.kraus().pairs();
  const auto& b = psi_b.kraus().pairs();
  if (a.empty() || b.empty()) return 0.0;
  const Objective f = [&](const ComplexVector& u, const ComplexVector& v) {
    return fidelity_objective(a, b, n, u, v);
  };
  const auto values = detail::run_restarts<double>(restarts, threads, [&](int r) {
    Rng rng = make_rng(seed, kFmaxStream, r);
    ComplexVector u = random_unit_vector(n * n, rng);
    ComplexVector v = random_unit_vector(n * n, rng);
    return sphere_ascent(f, u, v, kFidelityAscentIters);
  });
  return best_of(values);
}

double unitary_pair_reference(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows()) {
    throw DimensionError("unitary_pair_reference: need two square matrices of one size");
  }
  const Eigen::Index n = u.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  if ((u.adjoint() * u - id).cwiseAbs().maxCoeff() > 1e-9 ||
      (v.adjoint() * v - id).cwiseAbs().maxCoeff() > 1e-9) {
    throw DomainError("unitary_pair_reference: inputs must be unitary");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(u.adjoint() * v, false);
  std::vector<double> angles;
  for (Eigen::Index i = 0; i < n; ++i) angles.push_back(std::arg(es.eigenvalues()(i)));
  std::sort(angles.begin(), angles.end());

  // Points on the unit circle: the hull misses 0 exactly when they fit in an
  // open half circle, i.e. some gap between neighbours exceeds π. Then the
  // nearest hull point to 0 is the midpoint of the chord spanning the
  // remaining arc, at distance cos(arc / 2).
  const double two_pi = 2.0 * std::numbers::pi;
  double widest = angles.front() + two_pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) {
    widest = std::max(widest, angles[i] - angles[i - 1]);
  }
  if (widest <= std::numbers::pi) return 2.0;
  const double arc = two_pi - widest;
  return 2.0 * std::sin(arc / 2.0);
}

}  // namespace chandist::oracle
