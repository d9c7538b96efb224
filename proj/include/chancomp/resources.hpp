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

#include <optional>
#include <vector>

#include "chancomp/channel.hpp"
#include "chancomp/matrix.hpp"

namespace chancomp {

/// A finite set of elementary operations: unitaries (discrete) or
/// self-adjoint generators (continuous).
struct ResourceSet {
  enum class Kind { Discrete, Continuous };

  Kind kind = Kind::Discrete;
  int dim = 0;
  std::vector<ComplexMatrix> elements;
  bool symmetrized = false;

  void validate() const;
};

/// Discrete sets are closed under adjoints and get the identity adjoined;
/// continuous sets are used as given.
ResourceSet symmetrize(const ResourceSet& s);

enum class NormVariant { Inf, L2, Gradient };

/// Everything derived from a resource set: commutant basis, mean-zero basis,
/// the conditional-expectation channel, commutator superoperators and the
/// spectral gap of their Laplacian on the mean-zero space.
struct LipschitzStructure {
  ResourceSet resource;
  std::vector<ComplexMatrix> commutant_basis;   // HS-orthonormal
  std::vector<ComplexMatrix> mean_zero_basis;   // HS-orthonormal complement
  std::optional<QuantumChannel> efix_channel;   // projection onto the commutant
  ComplexMatrix efix_superop;
  std::vector<ComplexMatrix> comm_superops;     // x -> [s, x], one per element
  std::vector<ComplexMatrix> comm_pinv;         // pseudo-inverses of the above
  int active_count = 0;                         // elements with [s, .] != 0
  double lambda_gap = 0.0;                      // min nonzero eig of sum ad†ad

  const QuantumChannel& efix() const { return *efix_channel; }
  int dim() const { return resource.dim; }
  int mean_zero_dim() const { return static_cast<int>(mean_zero_basis.size()); }
};

LipschitzStructure build_structure(const ResourceSet& s);

double lipschitz_norm(const ComplexMatrix& x, const LipschitzStructure& l,
                      NormVariant variant = NormVariant::Inf);

/// x minus its conditional expectation; HS-orthogonal to the commutant.
ComplexMatrix mean_zero_project(const ComplexMatrix& x, const LipschitzStructure& l);

/// Composite resource set: every element embedded with identities on the
/// other tensor factors.
ResourceSet join_resources(const std::vector<ResourceSet>& parts);

/// Resource with every element tensored as I_m ⊗ s (ancilla first); used for
/// the amplified (correlation-assisted) norms.
ResourceSet amplify_resource(const ResourceSet& s, int ancilla_dim);

}  // namespace chancomp
