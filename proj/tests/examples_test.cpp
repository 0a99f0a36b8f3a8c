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

#include <cmath>

#include <gtest/gtest.h>

#include "chandist/examples.hpp"
#include "chandist/random.hpp"
#include "support.hpp"

namespace chandist {
namespace {

using examples::maximally_entangled;
using examples::pauli_pair;
using examples::run_example_sweep;
using examples::werner_holevo_pair;
using examples::wh_upper_bound;
using testing::max_abs_diff;

TEST(WernerHolevo, ChoiMatricesAreScaledProjectors) {
  for (int n = 2; n <= 4; ++n) {
    const auto [w0, w1] = werner_holevo_pair(n);
    const SwapProjectors p = swap_and_projectors(n);
    EXPECT_LT(max_abs_diff(w0.choi().matrix(), (2.0 / (n + 1)) * p.symmetric), 1e-10);
    EXPECT_LT(max_abs_diff(w1.choi().matrix(), (2.0 / (n - 1)) * p.antisymmetric), 1e-10);
    EXPECT_LT((w0.choi().matrix() * w1.choi().matrix()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_TRUE(is_cp(w0) && is_trace_preserving(w0));
    EXPECT_TRUE(is_cp(w1) && is_trace_preserving(w1));
  }
  EXPECT_EQ(werner_holevo_pair(2).second.choi_rank(), 1);
  EXPECT_THROW(werner_holevo_pair(1), DomainError);
}

TEST(WernerHolevo, MatchesDefiningFormula) {
  const int n = 3;
  const auto [w0, w1] = werner_holevo_pair(n);
  Rng rng = make_rng(90);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = random_density(n, 1 + t % n, rng).matrix();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix e0 = (x.trace() * id + x.transpose()) / static_cast<double>(n + 1);
    const ComplexMatrix e1 = (x.trace() * id - x.transpose()) / static_cast<double>(n - 1);
    EXPECT_LT(max_abs_diff(chandist::apply(w0, x), e0), 1e-10);
    EXPECT_LT(max_abs_diff(chandist::apply(w1, x), e1), 1e-10);
    EXPECT_NEAR(chandist::apply(w0, x).trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(chandist::apply(w1, x).trace().real(), 1.0, 1e-12);
  }
}

TEST(MaximallyEntangled, Examples) {
  const DensityMatrix bell = maximally_entangled(2);
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(bell.matrix(), phi * phi.adjoint()), 1e-15);
  for (int n = 1; n <= 4; ++n) {
    const ComplexMatrix xi = maximally_entangled(n).matrix();
    const ComplexMatrix mixed = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    EXPECT_LT(max_abs_diff(partial_trace(xi, n, n, Subsystem::B), mixed), 1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(xi, n, n, Subsystem::A), mixed), 1e-14);
    EXPECT_NEAR((xi * xi).trace().real(), 1.0, 1e-14);
  }
}

TEST(MaximallyEntangled, WernerHolevoOutputs) {
  for (int n = 2; n <= 4; ++n) {
    const auto [w0, w1] = werner_holevo_pair(n);
    const ComplexMatrix xi = maximally_entangled(n).matrix();
    const ComplexMatrix out0 = apply_extended(w0, xi, n);
    const ComplexMatrix out1 = apply_extended(w1, xi, n);
    const SwapProjectors p = swap_and_projectors(n);
    EXPECT_LT(max_abs_diff(out0, (2.0 / (n * (n + 1))) * p.symmetric), 1e-12);
    EXPECT_LT(max_abs_diff(out1, (2.0 / (n * (n - 1))) * p.antisymmetric), 1e-12);
    EXPECT_LT((out0 * out1).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(trace_norm(out0 - out1), 2.0, 1e-9);
  }
}

TEST(UpperBound, FormulaValues) {
  EXPECT_NEAR(wh_upper_bound(2, 1), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(wh_upper_bound(3, 1), 1.0, 1e-15);
  EXPECT_NEAR(wh_upper_bound(3, 3), 2.5, 1e-15);
  EXPECT_THROW(wh_upper_bound(3, 4), DomainError);
  EXPECT_THROW(wh_upper_bound(3, 0), DomainError);
}

TEST(PauliPair, Structure) {
  const auto [p0, p1] = pauli_pair();
  EXPECT_TRUE(is_cp(p0) && is_trace_preserving(p0));
  EXPECT_TRUE(is_cp(p1) && is_trace_preserving(p1));
  EXPECT_EQ(difference(p0, p1).choi_rank(), 4);

  const ComplexMatrix bell = maximally_entangled(2).matrix();
  const ComplexMatrix out0 = apply_extended(p0, bell, 2);
  const ComplexMatrix out1 = apply_extended(p1, bell, 2);
  EXPECT_LT((out0 * out1).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(trace_norm(out0 - out1), 2.0, 1e-12);
}

TEST(Sweep, WernerMonotoneAndBounded) {
  const auto rows = run_example_sweep(examples::Family::werner, 3, {1, 2, 3});
  ASSERT_EQ(rows.size(), 3u);
  double prev = 0.0;
  for (const auto& r : rows) {
    EXPECT_EQ(r.n, 3);
    EXPECT_GE(r.ancilla_value_computed, prev - 1e-12);
    EXPECT_LE(r.ancilla_value_computed, r.upper_bound + 1e-4);
    EXPECT_NEAR(r.upper_bound, wh_upper_bound(3, r.k), 1e-15);
    EXPECT_NEAR(r.success_probability, 0.5 + r.ancilla_value_computed / 4.0, 1e-12);
    EXPECT_EQ(r.dnorm_ref, 2.0);
    prev = r.ancilla_value_computed;
  }
}

TEST(Sweep, PauliValues) {
  const auto rows = run_example_sweep(examples::Family::pauli, 2, {1, 2});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].ancilla_value_computed, 4.0 / 3.0, 1e-3);
  EXPECT_NEAR(rows[0].success_probability, 5.0 / 6.0, 2.5e-4);
  EXPECT_NEAR(rows[1].ancilla_value_computed, 2.0, 1e-3);
  EXPECT_THROW(run_example_sweep(examples::Family::pauli, 3, {1}), DomainError);
}

TEST(Sweep, WernerQubitSaturates) {
  const auto rows = run_example_sweep(examples::Family::werner, 2, {2});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].ancilla_value_computed, 2.0, 1e-3);
}

TEST(Sweep, RejectsBadArguments) {
  EXPECT_THROW(run_example_sweep(examples::Family::werner, 1, {1}), DomainError);
  EXPECT_THROW(run_example_sweep(examples::Family::werner, 3, {4}), DomainError);
  EXPECT_THROW(examples::parse_family("bogus"), DomainError);
  EXPECT_EQ(examples::parse_family("pauli"), examples::Family::pauli);
  EXPECT_EQ(examples::family_name(examples::Family::werner), "werner");
}

TEST(WernerHolevo, AncillaValuesBelowBound) {
  for (int n = 2; n <= 4; ++n) {
    const auto [w0, w1] = werner_holevo_pair(n);
    for (int k = 1; k <= n; ++k) {
      const double v = ancilla_value(w0, w1, k).value;
      EXPECT_LE(v, wh_upper_bound(n, k) + 1e-4) << "n=" << n << " k=" << k;
    }
  }
}

TEST(WernerHolevo, SingleQuditInputIsNearlyUseless) {
  const auto [w0, w1] = werner_holevo_pair(4);
  const double v = ancilla_value(w0, w1, 1).value;
  EXPECT_NEAR(v, 4.0 / 5.0, 1e-6);
  EXPECT_LT(v, 0.81);
}

}  // namespace
}  // namespace chandist
