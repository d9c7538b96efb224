// Copyright 2026 chancomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "chancomp/channel.hpp"
#include "chancomp/resources.hpp"

namespace chancomp {

/// A named upper bound with independent provenance.
struct Certificate {
  std::string name;
  double value = 0.0;
};

/// Certified interval for a complexity-type quantity. The lower bound is
/// always witnessed: the witness lies in the feasible set (mean-zero, unit
/// Lipschitz ball) and the objective is re-evaluated on it exactly. The upper
/// bound is the smallest certificate.
struct ComplexityEstimate {
  double lower = 0.0;
  double upper = 0.0;
  ComplexMatrix witness;
  std::vector<Certificate> certificates;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

struct SolveOptions {
  std::uint64_t seed = 1;
  int restarts = 6;
  int ascent_iters = 80;
  double step0 = 0.5;
  double tol = 1e-9;
  int dykstra_max_cycles = 10000;
  double dykstra_tol = 1e-10;
  // ascent stops early once the certified lower bound reaches this value
  double lower_target = std::numeric_limits<double>::infinity();
  bool use_diamond_certificate = true;
  std::vector<int> ancilla_levels;            // empty -> {1, 2, d}
  std::vector<Certificate> extra_certificates;
  std::vector<ComplexMatrix> extra_starts;    // additional ascent seeds
};

/// Certified interval for the Lipschitz-to-operator-norm of Phi* - id on the
/// mean-zero space (the complexity of the channel relative to the resources).
ComplexityEstimate complexity_estimate(const QuantumChannel& phi, const LipschitzStructure& l,
                                       const SolveOptions& opts = {});

/// Expected length of the resource structure: the complexity of the
/// conditional-expectation channel itself, sup ||x|| over the unit ball.
ComplexityEstimate expected_length(const LipschitzStructure& l, const SolveOptions& opts = {});

/// Completely bounded (correlation-assisted) complexity: sup over ancilla
/// levels of the amplified estimate. Lower bounds are monotone across levels
/// by witness embedding; a level-uniform certificate is used when available.
ComplexityEstimate cb_complexity_estimate(const QuantumChannel& phi, const LipschitzStructure& l,
                                          const SolveOptions& opts = {});

struct IntervalResult {
  double lower = 0.0;
  double upper = 0.0;
};

/// Operator-norm-to-operator-norm of a superoperator acting on observables;
/// lower by alternating maximization over unitaries, upper by the diamond
/// norm of the preadjoint.
IntervalResult inf_to_inf_norm(const ComplexMatrix& superop, const SolveOptions& opts = {});

/// Dual (Wasserstein-type) norm of a state difference against the unit
/// Lipschitz ball under the normalized trace pairing tr(rho x)/d.
IntervalResult wasserstein_norm(const ComplexMatrix& rho, const LipschitzStructure& l,
                                const SolveOptions& opts = {});

struct IndexResult {
  double lower = 0.0;
  double upper = 0.0;
  bool upper_certified = false;
  ComplexVector witness_state;
};

/// Relative size of the ambient algebra over the fixed-point algebra:
/// Ind = sup_rho lambda_max(E(rho)^{-1/2} rho E(rho)^{-1/2}).
IndexResult subalgebra_index(const LipschitzStructure& l, const SolveOptions& opts = {});

struct EntropyTransportReport {
  double relative_entropy = 0.0;   // D(rho || E(rho))
  double wasserstein_lower = 0.0;  // certified lower for ||rho - E(rho)||_W
  double wasserstein_upper = 0.0;
  double transport_rhs = 0.0;      // 4 sqrt(2 D / lambda)
  bool holds = false;              // wasserstein_upper <= transport_rhs + tol
  double empirical_lambda = 0.0;   // finite-difference estimate, heuristic only
};

/// Checks the entropy-transport inequality ||rho - E(rho)||_W <= 4 sqrt(2D/lambda)
/// for a given modified-log-Sobolev constant lambda. The empirical lambda is a
/// sampled finite-difference estimate and is reported for orientation only.
EntropyTransportReport entropy_transport_check(const ComplexMatrix& rho,
                                               const LipschitzStructure& l, double lambda,
                                               const SolveOptions& opts = {});

}  // namespace chancomp
