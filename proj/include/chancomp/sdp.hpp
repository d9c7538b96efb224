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

#include <vector>

#include "chancomp/matrix.hpp"

namespace chancomp {

// Semidefinite program in standard form over a cone of Hermitian
// block-diagonal matrices:
//   minimize  <C, Z>   subject to  <A_i, Z> = b_i,  Z >= 0,
// with the dual
//   maximize  b.y      subject to  C - sum_i y_i A_i >= 0.
// Constraint matrices are stored sparsely (both triangles present).

struct SparseEntry {
  int row = 0;
  int col = 0;
  Complex value;
};

struct ConstraintBlock {
  int block = 0;
  std::vector<SparseEntry> entries;  // Hermitian: both triangles listed
};

struct SdpConstraint {
  std::vector<ConstraintBlock> blocks;
  double rhs = 0.0;
};

struct SdpProblem {
  std::vector<int> block_dims;
  std::vector<ComplexMatrix> objective;  // one (possibly zero) matrix per block
  std::vector<SdpConstraint> constraints;
};

struct SdpOptions {
  double tol = 1e-9;           // target for gap and both feasibility residuals
  double fallback_tol = 1e-7;  // accept the best iterate at this level
  int max_iter = 200;
  double step_fraction = 0.98;
  bool verbose = false;
};

struct SdpSolution {
  double primal_value = 0.0;  // <C, Z>
  double dual_value = 0.0;    // b.y
  double gap = 0.0;           // |primal - dual| / (1 + |primal| + |dual|)
  std::vector<ComplexMatrix> z;
  std::vector<ComplexMatrix> dual_slack;
  RealVector y;
  int iterations = 0;
  bool converged = false;
};

/// Infeasible-start primal-dual interior-point method (HKM search direction,
/// Mehrotra predictor-corrector). Throws ConvergenceError carrying the last
/// duality gap if the target tolerance is not reached.
SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opts = {});

}  // namespace chancomp
