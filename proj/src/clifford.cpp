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

#include "chancomp/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chancomp {

PauliResource pauli_resources(int n) {
  if (n < 1 || n > 3) throw InputError("pauli_resources: qubit count must be 1..3");
  PauliResource p;
  p.n = n;
  p.set.kind = ResourceSet::Kind::Discrete;
  p.set.dim = 1 << n;
  std::vector<int> dims(n, 2);
  for (int j = 0; j < n; ++j) {
    p.set.elements.push_back(embed_factor(pauli_x(), dims, j));
    p.set.elements.push_back(embed_factor(pauli_y(), dims, j));
    p.set.elements.push_back(embed_factor(pauli_z(), dims, j));
  }
  return p;
}

namespace {

void check_site(const ComplexMatrix& x, int n, int site) {
  if (n < 1 || site < 1 || site > n) throw InputError("site index out of range");
  if (x.rows() != (1 << n) || x.cols() != (1 << n))
    throw InputError("dimension is not 2^n");
}

}  // namespace

ComplexMatrix site_expectation(const ComplexMatrix& x, int n, int site) {
  check_site(x, n, site);
  std::vector<int> dims(n, 2);
  ComplexMatrix out = x;
  for (const ComplexMatrix& s : {pauli_x(), pauli_y(), pauli_z()}) {
    ComplexMatrix p = embed_factor(s, dims, site - 1);
    out += p * x * p;
  }
  return 0.25 * out;
}

ComplexMatrix site_expectation_direct(const ComplexMatrix& x, int n, int site) {
  check_site(x, n, site);
  std::vector<int> dims(n, 2);
  std::vector<int> keep;
  for (int f = 0; f < n; ++f)
    if (f != site - 1) keep.push_back(f);
  if (keep.empty()) return 0.5 * x.trace() * identity(2);
  ComplexMatrix reduced = partial_trace(x, SubsystemShape{dims}, keep);
  // re-embed with I/2 at the site: traced factor sits last after the kron,
  // then gets permuted back into place
  ComplexMatrix lifted = kron(reduced, 0.5 * identity(2));
  std::vector<int> perm;
  for (int f = 0; f < site - 1; ++f) perm.push_back(f);
  perm.push_back(n - 1);
  for (int f = site - 1; f < n - 1; ++f) perm.push_back(f);
  std::vector<int> lifted_dims(n, 2);
  return permute_factors(lifted, SubsystemShape{lifted_dims}, perm);
}

double l_norm(const ComplexMatrix& x, int n) {
  double best = 0.0;
  for (int j = 1; j <= n; ++j) {
    ComplexMatrix avg = site_expectation(x, n, j);
    ComplexMatrix direct = site_expectation_direct(x, n, j);
    if ((avg - direct).norm() > 1e-10)
      throw ConditioningError("l_norm: partial-trace realizations disagree");
    best = std::max(best, operator_norm(x - avg));
  }
  return best;
}

NormEquivalenceReport norm_equivalence_check(int samples, int n, std::uint64_t seed) {
  if (samples <= 0) throw InputError("norm_equivalence_check: nonpositive sample count");
  PauliResource p = pauli_resources(n);
  const int d = p.set.dim;

  NormEquivalenceReport rep;
  rep.min_ratio = 1.0;
  rep.max_ratio = 0.0;

  auto lip = [&](const ComplexMatrix& x) {
    double best = 0.0;
    for (const auto& s : p.set.elements) best = std::max(best, operator_norm(s * x - x * s));
    return best;
  };

  std::vector<ComplexMatrix> cases;
  cases.push_back(identity(d));
  std::vector<int> dims(n, 2);
  cases.push_back(embed_factor(pauli_z(), dims, 0));
  if (n >= 2) {
    ComplexMatrix zz = embed_factor(pauli_z(), dims, 0) * embed_factor(pauli_z(), dims, 1);
    cases.push_back(zz);
  }
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) cases.push_back(ginibre(d, d, rng));

  for (const auto& x : cases) {
    double den = lip(x);
    if (den < 1e-12) {
      ++rep.skipped;
      continue;
    }
    double ratio = l_norm(x, n) / den;
    ++rep.samples;
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (ratio < 0.25 - 1e-9 || ratio > 0.75 + 1e-9)
      throw ConvergenceError("norm_equivalence_check: constant violated, ratio " +
                             std::to_string(ratio));
  }
  rep.holds = true;
  return rep;
}

ContinuousCliffordReport continuous_from_discrete(const PauliResource& p, int samples,
                                                  std::uint64_t seed) {
  ContinuousCliffordReport rep;
  rep.continuous.kind = ResourceSet::Kind::Continuous;
  rep.continuous.dim = p.set.dim;
  // -i log c on the principal branch sends eigenvalue -1 to pi and +1 to 0,
  // which for a self-adjoint unitary is exactly pi (I - c) / 2
  for (const auto& c : p.set.elements)
    rep.continuous.elements.push_back(std::numbers::pi * 0.5 *
                                      (identity(p.set.dim) - c));

  LipschitzStructure ld = build_structure(p.set);
  LipschitzStructure lc = build_structure(rep.continuous);
  rep.commutant_match = ld.commutant_basis.size() == lc.commutant_basis.size();

  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    ComplexMatrix x = ginibre(p.set.dim, p.set.dim, rng);
    double disc = lipschitz_norm(x, ld, NormVariant::Inf);
    double cont = lipschitz_norm(x, lc, NormVariant::Inf);
    rep.max_excess = std::max(rep.max_excess, disc - cont);
    ++rep.samples;
  }
  rep.contraction_holds = rep.max_excess <= 1e-9;
  return rep;
}

}  // namespace chancomp
