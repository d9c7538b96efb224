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

#include "chancomp/resources.hpp"

namespace chancomp {

/// Single-site Pauli generators embedded into n qubits (site j acts on tensor
/// factor j-1, identities elsewhere).
struct PauliResource {
  int n = 0;
  ResourceSet set;  // 3n discrete elements, ordered X_1, Y_1, Z_1, X_2, ...
};

PauliResource pauli_resources(int n);  // 1 <= n <= 3

/// Conditional expectation onto operators trivial on site j, computed as the
/// single-site Pauli average (1/4) sum_P P_j x P_j.
ComplexMatrix site_expectation(const ComplexMatrix& x, int n, int site);

/// The same map via partial trace and re-embedding of I/2 at the site.
ComplexMatrix site_expectation_direct(const ComplexMatrix& x, int n, int site);

/// sup_j ||x - tr_j x||_inf; both realizations of tr_j are evaluated and
/// cross-checked to 1e-10.
double l_norm(const ComplexMatrix& x, int n);

struct NormEquivalenceReport {
  int samples = 0;
  int skipped = 0;  // vacuous cases (both norms zero)
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  bool holds = false;  // 1/4 <= ratio <= 3/4 throughout, slack 1e-9
};

/// Ratio ||x||_L / |||x|||_P over Ginibre samples plus fixed edge cases;
/// throws with the offending sample if either constant is violated.
NormEquivalenceReport norm_equivalence_check(int samples, int n, std::uint64_t seed);

struct ContinuousCliffordReport {
  ResourceSet continuous;        // a_j = pi (I - c_j) / 2
  bool commutant_match = false;  // same commutant dimension as the discrete set
  double max_excess = 0.0;       // max over samples of |||x|||_S - |||x|||_Delta
  bool contraction_holds = false;
  int samples = 0;
};

/// Self-adjoint generators obtained from the discrete Pauli resources by the
/// principal logarithm branch, with the comparison lemma checks attached.
ContinuousCliffordReport continuous_from_discrete(const PauliResource& p, int samples = 500,
                                                  std::uint64_t seed = 7);

}  // namespace chancomp
