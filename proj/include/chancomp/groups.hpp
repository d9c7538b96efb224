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

#include "chancomp/estimate.hpp"
#include "chancomp/matrix.hpp"
#include "chancomp/resources.hpp"

namespace chancomp {

/// A finite matrix group generated by unitaries, identified up to global
/// phase, with word lengths relative to the symmetrized generating set.
struct GroupTable {
  int dim = 0;
  std::vector<ComplexMatrix> elements;  // element 0 is the identity
  std::vector<int> word_length;         // BFS depth
  int diameter = 0;
};

/// Breadth-first closure of the generated group modulo global phase;
/// nullopt when the closure exceeds max_order (e.g. an infinite group).
std::optional<GroupTable> group_closure(const std::vector<ComplexMatrix>& generators,
                                        int max_order = 512);

struct LengthStats {
  double mean = 0.0;
  int diameter = 0;
  std::vector<int> counts;  // counts[k] = number of elements of length k
};

LengthStats length_statistics(const GroupTable& g);

/// Mean word length of the group generated by a discrete resource set, when
/// the closure is finite and small enough; the basis of length-type upper
/// certificates in the estimation engine.
std::optional<double> mean_word_length(const ResourceSet& s, int max_order = 512);

/// Exact check of the expected-length identity on a commutative ambient
/// algebra: the group acts on itself by translations on M_|G|, and the
/// expected length of the structure equals the mean word length, witnessed
/// by the diagonal function g -> E(l) - l(g).
struct CommutativeLengthCheck {
  int order = 0;
  double mean_length = 0.0;
  int diameter = 0;
  ComplexityEstimate estimate;
  double width = 0.0;  // estimate.upper - estimate.lower
};

/// Generators are given as permutations of {0..n-1}; the generated
/// permutation group (order <= 64) is the group under test.
CommutativeLengthCheck verify_expected_length_commutative(
    const std::vector<std::vector<int>>& generator_perms, const SolveOptions& opts = {});

/// Complexity interval of the averaging channel rho -> sum_g f(g) g rho g†
/// against the resource of length-one group elements, with the word-length
/// average sum_g f(g) l(g) supplied as an upper certificate.
struct AveragingBoundReport {
  ComplexityEstimate estimate;
  double length_average = 0.0;
  int diameter = 0;
  bool holds = false;  // estimate.upper <= length_average <= diameter + tol
};

AveragingBoundReport averaging_channel_bound(const GroupTable& g, const std::vector<double>& f,
                                             const SolveOptions& opts = {});

}  // namespace chancomp
