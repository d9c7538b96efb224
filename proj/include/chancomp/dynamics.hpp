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

#include "chancomp/estimate.hpp"

namespace chancomp {

/// One-parameter channel semigroup T_t = exp(t G) generated either by a
/// mixture of resource unitaries (G = Phi_mu - id) or by a gradient-form
/// Lindbladian with the resource generators as jumps.
struct SemigroupFamily {
  enum class Kind { Discrete, Lindblad };

  Kind kind = Kind::Discrete;
  int dim = 0;
  ComplexMatrix generator;  // Schrodinger superoperator
  LipschitzStructure structure;
};

/// Builds and validates a semigroup: exp(tG) must be CPTP at sample times and
/// G must annihilate the resource commutant (fixed-point algebra check).
SemigroupFamily make_semigroup(SemigroupFamily::Kind kind, const ResourceSet& resource,
                               const std::vector<double>& mu = {});

QuantumChannel evolve(const SemigroupFamily& f, double t);

enum class ReturnNorm {
  Diamond,      // two-sided, default
  InfInfUpper,  // upper bound only; the reported time is itself an upper bound
};

/// inf { t : ||T_t - E_fix|| <= eps }, located by bisection (grid scan if the
/// sampled decay is not monotone) to absolute resolution 1e-4.
double return_time(const SemigroupFamily& f, double eps, ReturnNorm norm = ReturnNorm::Diamond);

struct TrajectoryPoint {
  double time = 0.0;
  ComplexityEstimate estimate;
  std::string regime;  // "linear" below the half return time, else "plateau"
};

struct TrajectoryRecord {
  std::vector<TrajectoryPoint> points;
  double return_time_half = 0.0;
  ComplexityEstimate plateau;  // expected-length estimate of the structure
};

/// Complexity growth along the semigroup. Discrete-kind points carry the
/// t-linear upper certificate; every point reuses the plateau witness as an
/// ascent start so the growth profile is bounded below coherently.
TrajectoryRecord complexity_trajectory(const SemigroupFamily& f, const std::vector<double>& grid,
                                       const SolveOptions& opts = {});

/// Geometric grid (25 points) from 0.05 to 5 times the half return time.
std::vector<double> default_time_grid(const SemigroupFamily& f);

}  // namespace chancomp
