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

#include "chancomp/channel.hpp"
#include "chancomp/matrix.hpp"

namespace chancomp {

struct DiamondResult {
  double value = 0.0;  // midpoint estimate
  double lower = 0.0;  // certified (dual feasibility checked)
  double upper = 0.0;
  double gap = 0.0;
  int iterations = 0;
};

/// Diamond norm of the Hermitian-preserving map with the given superoperator,
/// via the semidefinite characterization
///   ||Psi||_diamond = min { || tr_out(Y1 + Y2) ||_inf : Y1, Y2 >= 0,
///                           Y1 - Y2 = Choi(Psi) }.
DiamondResult diamond_norm_superop(const ComplexMatrix& superop);

/// ||Phi - Psi||_diamond for two channels of equal dimension.
DiamondResult diamond_distance(const QuantumChannel& a, const QuantumChannel& b);

}  // namespace chancomp
