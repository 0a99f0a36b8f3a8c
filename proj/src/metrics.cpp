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

#include "chandist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chandist/random.hpp"
#include "restarts.hpp"

namespace chandist {

namespace {

// Stream tags keep the random starts of different solvers uncorrelated.
constexpr std::uint64_t kFmaxStream = 0x464d4158;     // "FMAX"
constexpr std::uint64_t kFmaxKStream = 0x464d584b;    // "FMXK"
constexpr std::uint64_t kAncillaStream = 0x414e4356;  // "ANCV"

constexpr double kArmijo = 1e-4;
constexpr double kMmRelTol = 1e-13;

// Completely positive map as Kraus operators K_j, X -> Σ K_j X K_j^*.
struct CpKraus {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<ComplexMatrix> ops;

  ComplexMatrix apply(const ComplexMatrix& x) const {
    ComplexMatrix out = ComplexMatrix::Zero(dim_out, dim_out);
    for (const auto& k : ops) out += k * x * k.adjoint();
    return out;
  }
  ComplexMatrix adjoint(const ComplexMatrix& y) const {
    ComplexMatrix out = ComplexMatrix::Zero(dim_in, dim_in);
    for (const auto& k : ops) out += k.adjoint() * y * k;
    return out;
  }
};

CpKraus cp_kraus(const SuperOp& psi, const std::string& name) {
  if (!is_cp(psi)) {
    throw DomainError(name + " is not completely positive");
  }
  CpKraus out{psi.dim_in(), psi.dim_out(), {}};
  if (psi.kraus().cp_symmetric()) {
    for (const auto& p : psi.kraus().pairs()) out.ops.push_back(p.left);
    return out;
  }
  // Rebuild from the PSD part of the Choi matrix; is_cp bounds what is lost.
  const EigenDecomposition e = eigh(HermitianMatrix(psi.choi().matrix()));
  const double top = std::max(e.values(0), 0.0);
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) > kDefaultRankTol * top) {
      out.ops.push_back(unvec(std::sqrt(e.values(i)) * e.vectors.col(i),
                              psi.dim_out(), psi.dim_in()));
    }
  }
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) / 2.0;
}

double lambda_max(const ComplexMatrix& h) {
  return eigh(HermitianMatrix(hermitian_part(h))).values(0);
}

// Smoothed fidelity F(P + μI, Q + μI) with the matrix Y = P_μ^{-1} # Q_μ that
// attains min_Y ½[Tr(P_μ Y) + Tr(Q_μ Y^{-1})]; by the envelope theorem the
// gradients are ½Y in P and ½Y^{-1} in Q.
struct SmoothedFidelity {
  double value = 0.0;
  ComplexMatrix y;
  ComplexMatrix y_inv;
};

SmoothedFidelity smoothed_fidelity(const ComplexMatrix& p,
                                   const ComplexMatrix& q, double mu) {
  const Eigen::Index n = p.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const double floor = std::max(mu * 1e-2, 1e-300);

  const EigenDecomposition ep = eigh(HermitianMatrix(hermitian_part(p) + mu * id));
  const RealVector dp = ep.values.cwiseMax(floor);
  const ComplexMatrix sp =
      ep.vectors * dp.cwiseSqrt().cast<Complex>().asDiagonal() * ep.vectors.adjoint();
  const ComplexMatrix isp = ep.vectors *
                            dp.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                            ep.vectors.adjoint();

  const ComplexMatrix m = hermitian_part(sp * (hermitian_part(q) + mu * id) * sp);
  const EigenDecomposition em = eigh(HermitianMatrix(m));
  const RealVector dm = em.values.cwiseMax(floor * floor);
  const ComplexMatrix sm =
      em.vectors * dm.cwiseSqrt().cast<Complex>().asDiagonal() * em.vectors.adjoint();
  const ComplexMatrix ism = em.vectors *
                            dm.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                            em.vectors.adjoint();

  SmoothedFidelity out;
  out.value = dm.cwiseSqrt().sum();
  out.y = hermitian_part(isp * sm * isp);
  out.y_inv = hermitian_part(sp * ism * sp);
  return out;
}

double plain_fidelity(const ComplexMatrix& p, const ComplexMatrix& q) {
  return fidelity(HermitianMatrix(p), HermitianMatrix(q));
}

// Any Y > 0 certifies F(Ψ_A(ρ1), Ψ_B(ρ2)) <= sqrt(λmax(Ψ_A^*(Y)) λmax(Ψ_B^*(Y^{-1}))).
double dual_bound(const CpKraus& a, const CpKraus& b, const SmoothedFidelity& s) {
  const double la = std::max(lambda_max(a.adjoint(s.y)), 0.0);
  const double lb = std::max(lambda_max(b.adjoint(s.y_inv)), 0.0);
  return std::sqrt(la * lb);
}

double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace().real();
}

// The smoothed certificate is loose by about sqrt(mu) when the optimal outputs
// have disjoint supports, so shrink mu at the final point until it certifies.
double refine_dual(const CpKraus& a, const CpKraus& b, const ComplexMatrix& r1,
                   const ComplexMatrix& r2, double primal, double dual, double tol) {
  const ComplexMatrix p = a.apply(r1);
  const ComplexMatrix q = b.apply(r2);
  const double scale = std::max({1.0, p.cwiseAbs().maxCoeff(), q.cwiseAbs().maxCoeff()});
  for (double mu = 1e-9 * scale; mu >= 1e-15 * scale; mu *= 0.1) {
    if (dual - primal <= tol * std::max(1.0, primal)) break;
    dual = std::min(dual, dual_bound(a, b, smoothed_fidelity(p, q, mu)));
  }
  return dual;
}

struct AscentRun {
  double primal = -1.0;
  ComplexMatrix rho_a;
  ComplexMatrix rho_b;
  double dual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

// Projected gradient ascent over D(X) x D(X) with backtracking, continued
// through the smoothing schedule. Tracks the best unsmoothed primal value and
// the lowest dual bound seen.
AscentRun projected_ascent(const CpKraus& a, const CpKraus& b, ComplexMatrix r1,
                           ComplexMatrix r2, const SolverOptions& opts) {
  AscentRun run;
  const auto certified = [&] {
    return run.dual - run.primal <= opts.tol * std::max(1.0, run.primal);
  };
  const auto record = [&](const ComplexMatrix& x1, const ComplexMatrix& x2,
                          const SmoothedFidelity& s) {
    const double f = plain_fidelity(a.apply(x1), b.apply(x2));
    if (f > run.primal) {
      run.primal = f;
      run.rho_a = x1;
      run.rho_b = x2;
    }
    run.dual = std::min(run.dual, dual_bound(a, b, s));
  };

  double eta = 1.0;
  for (double mu : opts.smoothing_schedule) {
    SmoothedFidelity cur = smoothed_fidelity(a.apply(r1), b.apply(r2), mu);
    record(r1, r2, cur);
    if (certified()) return run;
    int stalls = 0;
    for (int it = 0; it < opts.max_iters; ++it) {
      ++run.iterations;
      const ComplexMatrix g1 = 0.5 * a.adjoint(cur.y);
      const ComplexMatrix g2 = 0.5 * b.adjoint(cur.y_inv);
      bool accepted = false;
      bool stationary = false;
      ComplexMatrix n1, n2;
      SmoothedFidelity next;
      while (eta > 1e-16) {
        n1 = project_to_density(hermitian_part(r1 + eta * g1));
        n2 = project_to_density(hermitian_part(r2 + eta * g2));
        const double ascent = real_inner(g1, n1 - r1) + real_inner(g2, n2 - r2);
        if (ascent <= 1e-15 * std::max(1.0, cur.value)) {
          stationary = true;
          break;
        }
        next = smoothed_fidelity(a.apply(n1), b.apply(n2), mu);
        if (next.value >= cur.value + kArmijo * ascent) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
      const double gain = next.value - cur.value;
      r1 = std::move(n1);
      r2 = std::move(n2);
      cur = std::move(next);
      eta = std::min(eta * 2.0, 1e8);
      record(r1, r2, cur);
      if (certified()) return run;
      stalls = gain <= 1e-15 * std::max(1.0, cur.value) ? stalls + 1 : 0;
      if (stationary || stalls >= 20) break;
    }
  }
  return run;
}

// Φ'(X) = Σ_z C_z X D_z^*, the map whose k-extended trace norm the
// rank-restricted fidelity maximum equals.
struct BilinearMap {
  int dim_in = 0;
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
};

struct VectorAscent {
  double value = -1.0;
  ComplexVector u;
  ComplexVector v;
  int iterations = 0;
  bool converged = false;
};

std::vector<ComplexMatrix> extend_ops(const std::vector<ComplexMatrix>& ops, int k) {
  const ComplexMatrix id = ComplexMatrix::Identity(k, k);
  std::vector<ComplexMatrix> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(tensor_product(op, id));
  return out;
}

ComplexMatrix extended_image(const std::vector<ComplexMatrix>& left,
                             const std::vector<ComplexMatrix>& right,
                             const ComplexVector& u, const ComplexVector& v) {
  const Eigen::Index m = left.front().rows();
  ComplexMatrix a(m, static_cast<Eigen::Index>(left.size()));
  ComplexMatrix b(m, static_cast<Eigen::Index>(left.size()));
  for (std::size_t z = 0; z < left.size(); ++z) {
    a.col(z) = left[z] * u;
    b.col(z) = right[z] * v;
  }
  return a * b.adjoint();
}

// Alternating maximization of ‖(Φ' ⊗ 1)(uv^*)‖₁ = max_U |Tr(U M)|: fix the
// polar factor U of M, then the best (u, v) is the top singular pair of
// Σ_z D_z^* U C_z. Each step can only increase the objective.
VectorAscent bilinear_ascent(const std::vector<ComplexMatrix>& left,
                             const std::vector<ComplexMatrix>& right,
                             ComplexVector u, ComplexVector v, int max_iters) {
  VectorAscent out;
  for (int it = 0; it < max_iters; ++it) {
    const ComplexMatrix m = extended_image(left, right, u, v);
    const SingularValueDecomposition f = svd(m);
    const double value = f.values.sum();
    out.value = value;
    out.u = u;
    out.v = v;
    out.iterations = it + 1;
    const ComplexMatrix polar = f.v * f.u.adjoint();
    ComplexMatrix k = ComplexMatrix::Zero(u.size(), u.size());
    for (std::size_t z = 0; z < left.size(); ++z) {
      k += right[z].adjoint() * polar * left[z];
    }
    const SingularValueDecomposition g = svd(k);
    if (g.values(0) <= value + kMmRelTol * std::max(1.0, value)) {
      out.converged = true;
      return out;
    }
    u = g.v.col(0);
    v = g.u.col(0);
  }
  const double value = trace_norm(extended_image(left, right, u, v));
  if (value > out.value) {
    out.value = value;
    out.u = u;
    out.v = v;
  }
  return out;
}

// Same idea restricted to u = v for a Hermiticity-preserving map: fix
// S = sign(M), then the best u is the top eigenvector of Σ_j B_j^* S A_j.
VectorAscent hermitian_ascent(const std::vector<ComplexMatrix>& left,
                              const std::vector<ComplexMatrix>& right,
                              ComplexVector u, int max_iters) {
  VectorAscent out;
  for (int it = 0; it < max_iters; ++it) {
    const ComplexMatrix m = hermitian_part(extended_image(left, right, u, u));
    const EigenDecomposition e = eigh(HermitianMatrix(m));
    const double value = e.values.cwiseAbs().sum();
    out.value = value;
    out.u = u;
    out.v = u;
    out.iterations = it + 1;
    RealVector signs(e.values.size());
    for (Eigen::Index i = 0; i < signs.size(); ++i) {
      signs(i) = e.values(i) >= 0.0 ? 1.0 : -1.0;
    }
    const ComplexMatrix s =
        e.vectors * signs.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    ComplexMatrix h = ComplexMatrix::Zero(u.size(), u.size());
    for (std::size_t j = 0; j < left.size(); ++j) {
      h += right[j].adjoint() * s * left[j];
    }
    const EigenDecomposition eh = eigh(HermitianMatrix(hermitian_part(h)));
    if (eh.values(0) <= value + kMmRelTol * std::max(1.0, value)) {
      out.converged = true;
      return out;
    }
    u = eh.vectors.col(0);
  }
  const ComplexMatrix m = hermitian_part(extended_image(left, right, u, u));
  const double value = eigh(HermitianMatrix(m)).values.cwiseAbs().sum();
  if (value > out.value) {
    out.value = value;
    out.u = u;
    out.v = u;
  }
  return out;
}

// Σ_{i < min(n,k)} |i>|i> normalized: the maximally entangled start.
ComplexVector entangled_start(int n, int k) {
  ComplexVector u = ComplexVector::Zero(static_cast<Eigen::Index>(n) * k);
  const int r = std::min(n, k);
  for (int i = 0; i < r; ++i) u(static_cast<Eigen::Index>(i) * k + i) = 1.0;
  return u / std::sqrt(static_cast<double>(r));
}

// u ∈ X ⊗ W_{k-1} placed into X ⊗ W_k.
ComplexVector embed_ancilla(const ComplexVector& u, int n, int k_from, int k_to) {
  ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(n) * k_to);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < k_from; ++w) {
      out(static_cast<Eigen::Index>(x) * k_to + w) = u(static_cast<Eigen::Index>(x) * k_from + w);
    }
  }
  return out;
}

// Dilate both maps over a shared environment E and swap the roles of the
// output and the environment: C_z(e, x) = K^A_e(z, x).
BilinearMap swapped_dilation(const CpKraus& a, const CpKraus& b) {
  const auto env = static_cast<Eigen::Index>(std::max<std::size_t>(
      {a.ops.size(), b.ops.size(), 1}));
  BilinearMap out;
  out.dim_in = a.dim_in;
  out.left.assign(a.dim_out, ComplexMatrix::Zero(env, a.dim_in));
  out.right.assign(a.dim_out, ComplexMatrix::Zero(env, a.dim_in));
  for (int z = 0; z < a.dim_out; ++z) {
    for (std::size_t e = 0; e < a.ops.size(); ++e) out.left[z].row(e) = a.ops[e].row(z);
    for (std::size_t e = 0; e < b.ops.size(); ++e) out.right[z].row(e) = b.ops[e].row(z);
  }
  return out;
}

// vec(sqrt(rho)) in X ⊗ W with dim W = dim X.
ComplexVector canonical_purification(const ComplexMatrix& rho) {
  const Eigen::Index n = rho.rows();
  const ComplexMatrix root = sqrtm_psd(HermitianMatrix(hermitian_part(rho))).matrix();
  ComplexVector out(n * n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index w = 0; w < n; ++w) out(x * n + w) = root(x, w);
  }
  const double norm = out.norm();
  return norm > 0.0 ? ComplexVector(out / norm) : entangled_start(static_cast<int>(n), static_cast<int>(n));
}

void require_same_shape(const SuperOp& a, const SuperOp& b, const char* what) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw DimensionError(std::string(what) + ": super-operators have different dimensions");
  }
}

void require_admissible(const SuperOp& phi, const char* name) {
  if (!is_cp(phi) || !is_trace_preserving(phi)) {
    throw DomainError(std::string(name) + " is not a channel (CP and trace preserving)");
  }
}

}  // namespace

HelstromResult helstrom(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw DimensionError("helstrom: states have different dimensions");
  }
  const EigenDecomposition e =
      eigh(HermitianMatrix(rho0.matrix() - rho1.matrix()));
  ComplexMatrix proj = ComplexMatrix::Zero(rho0.dim(), rho0.dim());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) >= 0.0) proj += e.vectors.col(i) * e.vectors.col(i).adjoint();
  }
  return {HermitianMatrix(proj), 0.5 + e.values.cwiseAbs().sum() / 4.0};
}

FMaxResult fmax(const SuperOp& psi_a, const SuperOp& psi_b,
                const SolverOptions& opts) {
  require_same_shape(psi_a, psi_b, "fmax");
  const CpKraus a = cp_kraus(psi_a, "Psi_A");
  const CpKraus b = cp_kraus(psi_b, "Psi_B");
  const int n = a.dim_in;
  const ComplexMatrix flat = ComplexMatrix::Identity(n, n) / static_cast<double>(n);

  AscentRun best = projected_ascent(a, b, flat, flat, opts);
  int iterations = best.iterations;
  double dual = best.dual;
  const bool first_certified = best.dual - best.primal <= opts.tol * std::max(1.0, best.primal);
  if (!first_certified || opts.restarts > 1) {
    Rng rng = make_rng(opts.seed, kFmaxStream, 1);
    const ComplexMatrix s1 = random_density(n, n, rng).matrix();
    const ComplexMatrix s2 = random_density(n, n, rng).matrix();
    AscentRun confirm = projected_ascent(a, b, s1, s2, opts);
    iterations += confirm.iterations;
    dual = std::min(dual, confirm.dual);
    if (confirm.primal > best.primal) best = std::move(confirm);
  }

  // Gradient steps crawl near rank-deficient optima; the alternating vector
  // ascent from the current purifications finishes the job cheaply.
  {
    const BilinearMap phi = swapped_dilation(a, b);
    const auto left = extend_ops(phi.left, n);
    const auto right = extend_ops(phi.right, n);
    const VectorAscent polish =
        bilinear_ascent(left, right, canonical_purification(best.rho_a),
                        canonical_purification(best.rho_b), opts.max_iters);
    iterations += polish.iterations;
    const ComplexMatrix p1 = partial_trace(outer(polish.u, polish.u), n, n, Subsystem::B);
    const ComplexMatrix p2 = partial_trace(outer(polish.v, polish.v), n, n, Subsystem::B);
    const double f = plain_fidelity(a.apply(p1), b.apply(p2));
    if (f > best.primal) {
      best.primal = f;
      best.rho_a = p1;
      best.rho_b = p2;
    }
  }
  dual = refine_dual(a, b, best.rho_a, best.rho_b, best.primal, dual, opts.tol);

  FMaxResult out;
  out.rho_a = DensityMatrix(project_to_density(best.rho_a));
  out.rho_b = DensityMatrix(project_to_density(best.rho_b));
  out.value = plain_fidelity(a.apply(out.rho_a.matrix()), b.apply(out.rho_b.matrix()));
  out.upper_bound = std::max(dual, out.value);
  out.iterations = iterations;
  out.converged = out.upper_bound - out.value <= opts.tol * std::max(1.0, out.value);
  return out;
}

FMaxResult fmax_k(const SuperOp& psi_a, const SuperOp& psi_b, int k,
                  const SolverOptions& opts) {
  require_same_shape(psi_a, psi_b, "fmax_k");
  const int n = psi_a.dim_in();
  if (k < 1 || k > n) {
    throw DomainError("fmax_k: k must lie in [1, " + std::to_string(n) + "]");
  }
  const CpKraus a = cp_kraus(psi_a, "Psi_A");
  const CpKraus b = cp_kraus(psi_b, "Psi_B");

  if (a.ops.empty() && b.ops.empty()) {
    FMaxResult zero;
    zero.rho_a = DensityMatrix::pure(entangled_start(n, 1));
    zero.rho_b = zero.rho_a;
    zero.converged = true;
    zero.upper_bound = 0.0;
    return zero;
  }
  const BilinearMap phi = swapped_dilation(a, b);
  const auto left_k = extend_ops(phi.left, k);
  const auto right_k = extend_ops(phi.right, k);

  const int restarts = std::max(1, opts.restarts);
  const auto runs = detail::run_restarts<VectorAscent>(
      restarts, opts.threads, [&](int r) {
        ComplexVector u0, v0;
        if (r == 0) {
          u0 = v0 = entangled_start(n, k);
        } else {
          Rng rng = make_rng(opts.seed, kFmaxKStream + static_cast<std::uint64_t>(k), r);
          u0 = random_unit_vector(n * k, rng);
          v0 = random_unit_vector(n * k, rng);
        }
        return bilinear_ascent(left_k, right_k, u0, v0, opts.max_iters);
      });
  const VectorAscent& best =
      runs[detail::best_index(runs, [](const VectorAscent& r) { return r.value; })];

  FMaxResult out;
  out.rho_a = DensityMatrix::normalized(
      partial_trace(outer(best.u, best.u), n, k, Subsystem::B));
  out.rho_b = DensityMatrix::normalized(
      partial_trace(outer(best.v, best.v), n, k, Subsystem::B));
  out.value = plain_fidelity(a.apply(out.rho_a.matrix()), b.apply(out.rho_b.matrix()));
  out.iterations = 0;
  for (const auto& r : runs) out.iterations += r.iterations;
  out.converged = best.converged;
  out.upper_bound = std::numeric_limits<double>::infinity();
  return out;
}

ComplementaryDilation minimal_complementary_pair(const SuperOp& phi, double tau) {
  const int rank = phi.choi_rank(tau);
  if (rank == 0) {
    throw DomainError("zero super-operator has no complementary pair");
  }
  StinespringRep s = stinespring_from_kraus(kraus_from_choi(phi.choi(), tau));
  auto [psi_a, psi_b] = complementary_pair(s);
  return {rank, std::move(s), std::move(psi_a), std::move(psi_b)};
}

double tnorm_ext(const SuperOp& phi, int k, const SolverOptions& opts) {
  if (phi.choi_rank() == 0) return 0.0;
  const ComplementaryDilation d = minimal_complementary_pair(phi);
  return fmax_k(d.psi_a, d.psi_b, k, opts).value;
}

DiamondNormResult dnorm(const SuperOp& phi, const SolverOptions& opts) {
  DiamondNormResult out;
  out.choi_rank = phi.choi_rank();
  if (out.choi_rank == 0) return out;
  const ComplementaryDilation d = minimal_complementary_pair(phi);
  const FMaxResult r = fmax(d.psi_a, d.psi_b, opts);
  out.value = r.value;
  out.upper_bound = r.upper_bound;
  out.converged = r.converged;
  out.iterations = r.iterations;
  return out;
}

AncillaValueResult ancilla_value(const SuperOp& phi0, const SuperOp& phi1,
                                 int k, const SolverOptions& opts) {
  require_same_shape(phi0, phi1, "ancilla_value");
  require_admissible(phi0, "Phi0");
  require_admissible(phi1, "Phi1");
  if (k < 1) throw DomainError("ancilla_value: k must be >= 1");
  const int n = phi0.dim_in();
  const SuperOp delta = difference(phi0, phi1);

  AncillaValueResult out;
  if (delta.kraus().size() == 0) {
    out.input = UnitVector(entangled_start(n, k));
    out.converged = true;
    return out;
  }
  std::vector<ComplexMatrix> left, right;
  for (const auto& p : delta.kraus().pairs()) {
    left.push_back(p.left);
    right.push_back(p.right);
  }

  const int restarts = std::max(1, opts.restarts);
  VectorAscent previous;
  for (int kk = 1; kk <= k; ++kk) {
    const auto left_k = extend_ops(left, kk);
    const auto right_k = extend_ops(right, kk);
    const bool warm = kk > 1;
    const auto runs = detail::run_restarts<VectorAscent>(
        restarts + (warm ? 1 : 0), opts.threads, [&](int r) {
          ComplexVector u0;
          if (warm && r == 0) {
            u0 = embed_ancilla(previous.u, n, kk - 1, kk);
          } else {
            Rng rng = make_rng(opts.seed, kAncillaStream + static_cast<std::uint64_t>(kk), r);
            u0 = random_unit_vector(n * kk, rng);
          }
          return hermitian_ascent(left_k, right_k, u0, opts.max_iters);
        });
    previous = runs[detail::best_index(runs, [](const VectorAscent& r) { return r.value; })];
    out.iterations += previous.iterations;
  }
  out.value = previous.value;
  out.input = UnitVector::normalize(previous.u);
  out.converged = previous.converged;
  return out;
}

double channel_success(const SuperOp& phi0, const SuperOp& phi1,
                       const SolverOptions& opts) {
  require_same_shape(phi0, phi1, "channel_success");
  require_admissible(phi0, "Phi0");
  require_admissible(phi1, "Phi1");
  return 0.5 + dnorm(difference(phi0, phi1), opts).value / 4.0;
}

}  // namespace chandist
