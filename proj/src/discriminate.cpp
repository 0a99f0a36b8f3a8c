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

#include "chandist/discriminate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chandist {

namespace {

constexpr double kVerifyTol = 1e-8;
constexpr double kRouteTol = 1e-6;
constexpr double kEigenCut = 1e-12;

// ‖H‖₁ for Hermitian H through its spectrum.
double hermitian_trace_norm(const ComplexMatrix& h) {
  return eigh(HermitianMatrix((h + h.adjoint()) / 2.0)).values.cwiseAbs().sum();
}

double extended_value(const SuperOp& delta, const ComplexVector& u, int ancilla) {
  return hermitian_trace_norm(apply_extended(delta, outer(u, u), ancilla));
}

void require_channel(const SuperOp& phi, const char* name) {
  if (!is_cp(phi) || !is_trace_preserving(phi)) {
    throw DomainError(std::string(name) + " is not a channel (CP and trace preserving)");
  }
}

HelstromResult output_measurement(const SuperOp& phi0, const SuperOp& phi1,
                                  const ComplexVector& u, int ancilla) {
  const ComplexMatrix rho = outer(u, u);
  return helstrom(DensityMatrix(apply_extended(phi0, rho, ancilla)),
                  DensityMatrix(apply_extended(phi1, rho, ancilla)));
}

// Replaces ρ by a preimage of rank <= rank of its image, if it is larger.
DensityMatrix shrink(const SuperOp& psi, const DensityMatrix& rho, int target,
                     ReductionTrace& trace) {
  if (density_rank(rho) <= target) return rho;
  ReductionResult r = reduce_preimage(psi, rho);
  trace = std::move(r.trace);
  return r.rho;
}

}  // namespace

UnitVector hermitian_doubling(const ComplexMatrix& x, const SuperOp& delta,
                              int ancilla_dim) {
  const Eigen::Index m = static_cast<Eigen::Index>(delta.dim_in()) * ancilla_dim;
  if (x.rows() != m || x.cols() != m) {
    throw DimensionError("hermitian_doubling: operator must be " +
                         std::to_string(m) + "x" + std::to_string(m));
  }
  const double tn = trace_norm(x);
  if (std::abs(tn - 1.0) > 1e-9) {
    throw DomainError("hermitian_doubling: trace norm is " + std::to_string(tn) +
                      ", expected 1");
  }
  ComplexMatrix e01 = ComplexMatrix::Zero(2, 2);
  e01(0, 1) = 1.0;
  const ComplexMatrix y = 0.5 * tensor_product(x, e01) +
                          0.5 * tensor_product(ComplexMatrix(x.adjoint()),
                                               ComplexMatrix(e01.adjoint()));
  const EigenDecomposition e = eigh(HermitianMatrix(y));
  int best = -1;
  double best_value = -1.0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (std::abs(e.values(i)) <= kEigenCut) continue;
    const double value = extended_value(delta, e.vectors.col(i), 2 * ancilla_dim);
    if (value > best_value) {
      best_value = value;
      best = static_cast<int>(i);
    }
  }
  return UnitVector::normalize(e.vectors.col(best));
}

UnitVector hermitian_doubling(const ComplexMatrix& x, const SuperOp& delta_ext) {
  return hermitian_doubling(x, delta_ext, 1);
}

DiscriminationResult optimal_input(const SuperOp& phi0, const SuperOp& phi1,
                                   const SolverOptions& opts) {
  if (phi0.dim_in() != phi1.dim_in() || phi0.dim_out() != phi1.dim_out()) {
    throw DimensionError("optimal_input: channels have different dimensions");
  }
  require_channel(phi0, "Phi0");
  require_channel(phi1, "Phi1");
  const int n = phi0.dim_in();
  const SuperOp delta = difference(phi0, phi1);

  DiscriminationResult out;
  out.choi_rank_k = delta.choi_rank();
  const int k = out.choi_rank_k;
  out.ancilla_dim = 2 * k;
  if (k == 0) {
    // Identical channels: every input is optimal and scores 0.
    const ComplexVector u = ComplexVector::Unit(n, 0);
    out.input_vector = UnitVector(u);
    out.measurement = output_measurement(phi0, phi1, u, 1);
    out.achieved_value = extended_value(delta, u, 1);
    return out;
  }

  const ComplementaryDilation dil = minimal_complementary_pair(delta);
  const FMaxResult f = fmax(dil.psi_a, dil.psi_b, opts);
  out.dnorm_value = f.value;
  out.dnorm_upper_bound = f.upper_bound;
  auto& diag = out.diagnostics;
  diag.solver_converged = f.converged;
  diag.solver_iterations = f.iterations;
  diag.rank_a_before = density_rank(f.rho_a);
  diag.rank_b_before = density_rank(f.rho_b);

  const DensityMatrix rho_a = shrink(dil.psi_a, f.rho_a, k, diag.reduction_a);
  const DensityMatrix rho_b = shrink(dil.psi_b, f.rho_b, k, diag.reduction_b);
  diag.rank_a = density_rank(rho_a);
  diag.rank_b = density_rank(rho_b);
  diag.fidelity_route_value =
      fidelity(HermitianMatrix(chandist::apply(dil.psi_a, rho_a.matrix())),
               HermitianMatrix(chandist::apply(dil.psi_b, rho_b.matrix())));

  const ComplexVector ua = purify(rho_a, k).vector();
  const ComplexVector vb = purify(rho_b, k).vector();
  const ComplexMatrix x_opt = outer(ua, vb);
  diag.trace_norm_route_value = trace_norm(apply_extended(delta, x_opt, k));
  diag.discrepancy =
      std::abs(diag.fidelity_route_value - diag.trace_norm_route_value) > kRouteTol;

  const UnitVector u = hermitian_doubling(x_opt, delta, k);
  out.input_vector = u;
  out.achieved_value = extended_value(delta, u.vector(), out.ancilla_dim);
  out.measurement = output_measurement(phi0, phi1, u.vector(), out.ancilla_dim);
  return out;
}

VerificationReport verify(const DiscriminationResult& result,
                          const SuperOp& phi0, const SuperOp& phi1) {
  VerificationReport report;
  const auto fail = [&](const std::string& why) { report.failures.push_back(why); };
  const int n = phi0.dim_in();
  const int ancilla = std::max(1, result.ancilla_dim);
  const ComplexVector& u = result.input_vector.vector();
  if (u.size() != static_cast<Eigen::Index>(n) * ancilla) {
    fail("input vector has dimension " + std::to_string(u.size()) + ", expected " +
         std::to_string(n * ancilla));
    return report;
  }
  if (std::abs(u.norm() - 1.0) > kVerifyTol) fail("input vector is not normalized");

  const int k = difference(phi0, phi1).choi_rank();
  if (k != result.choi_rank_k) {
    fail("Choi rank is " + std::to_string(k) + ", stored " +
         std::to_string(result.choi_rank_k));
  }
  if (result.ancilla_dim != 2 * result.choi_rank_k) {
    fail("ancilla dimension is not twice the Choi rank");
  }

  const ComplexMatrix rho = outer(u, u);
  const ComplexMatrix w0 = apply_extended(phi0, rho, ancilla);
  const ComplexMatrix w1 = apply_extended(phi1, rho, ancilla);
  const double value = hermitian_trace_norm(w0 - w1);
  report.value_residual = std::abs(value - result.achieved_value);
  if (report.value_residual > kVerifyTol) fail("achieved value does not match the outputs");

  const HelstromResult h = helstrom(DensityMatrix(w0), DensityMatrix(w1));
  report.success_residual =
      std::abs(h.success_probability - result.measurement.success_probability);
  if (report.success_residual > kVerifyTol) fail("stored success probability is wrong");

  const ComplexMatrix& proj = result.measurement.projector.matrix();
  if (proj.rows() != w0.rows()) {
    fail("measurement acts on the wrong space");
  } else {
    report.measurement_residual =
        std::abs((proj * (w0 - w1)).trace().real() - value / 2.0);
    if (report.measurement_residual > kVerifyTol) fail("measurement is not optimal");
  }
  report.bound_residual =
      std::abs(result.measurement.success_probability - (0.5 + result.achieved_value / 4.0));
  if (report.bound_residual > kVerifyTol) fail("success probability is not 1/2 + value/4");

  report.passed = report.failures.empty();
  return report;
}

}  // namespace chandist
