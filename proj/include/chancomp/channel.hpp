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

#include <string>
#include <vector>

#include "chancomp/matrix.hpp"

namespace chancomp {

// Conventions, fixed once for the whole library:
//  * vec is column stacking, so vec(A X B) = (B^T kron A) vec(X);
//  * the superoperator of a Kraus map rho -> sum K rho K† is sum conj(K) kron K;
//  * the Choi matrix lives on input kron output: C = sum vec(K) vec(K)†
//    = (id kron Phi)(|Omega><Omega|) with |Omega> = sum_i |i>|i>.
// Channels act on states (Schrodinger picture); the dual (Heisenberg) action
// on observables has superoperator superop().adjoint().

/// A CPTP map with synchronized Kraus / Choi / superoperator representations.
class QuantumChannel {
 public:
  static constexpr double kCptpTol = 1e-8;

  /// Build and validate from Kraus operators (sum K†K = I to kCptpTol).
  static QuantumChannel from_kraus(const std::vector<ComplexMatrix>& kraus);

  /// Build from a superoperator; Kraus operators are recovered from the Choi
  /// eigendecomposition, which also certifies complete positivity.
  static QuantumChannel from_superop(const ComplexMatrix& superop);

  static QuantumChannel identity_channel(int dim);

  int dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& superop() const { return superop_; }
  const ComplexMatrix& choi() const { return choi_; }

  /// Schrodinger action on x (dual=false) or Heisenberg action (dual=true).
  ComplexMatrix apply(const ComplexMatrix& x, bool dual = false) const;

 private:
  QuantumChannel() = default;
  void validate() const;

  int dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix superop_;
  ComplexMatrix choi_;
};

enum class CombineKind { Compose, Mix, Tensor };

/// Compose (result = channels[0] ∘ channels[1] ∘ ..., last applied first),
/// convex-combine, or tensor a list of channels.
QuantumChannel combine(CombineKind kind, const std::vector<QuantumChannel>& channels,
                       const std::vector<double>& weights = {});

/// Channel rho -> sum_i mu_i U_i rho U_i†.
QuantumChannel unitary_mixture(const std::vector<ComplexMatrix>& unitaries,
                               const std::vector<double>& mu);

ComplexMatrix choi_from_superop(const ComplexMatrix& superop);
ComplexMatrix superop_from_choi(const ComplexMatrix& choi);
std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, double tol);

}  // namespace chancomp
