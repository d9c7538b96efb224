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

#include "chancomp/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "chancomp/diamond.hpp"

namespace chancomp {

SemigroupFamily make_semigroup(SemigroupFamily::Kind kind, const ResourceSet& resource,
                               const std::vector<double>& mu) {
  SemigroupFamily f;
  f.kind = kind;
  f.structure = build_structure(resource);
  f.dim = f.structure.dim();
  const int d = f.dim;
  const int d2 = d * d;

  if (kind == SemigroupFamily::Kind::Discrete) {
    if (resource.kind != ResourceSet::Kind::Discrete)
      throw InputError("make_semigroup: discrete kind needs unitary resources");
    if (mu.size() != resource.elements.size())
      throw InputError("make_semigroup: one probability per resource element required");
    QuantumChannel phi_mu = unitary_mixture(resource.elements, mu);
    f.generator = phi_mu.superop() - ComplexMatrix::Identity(d2, d2);
  } else {
    if (resource.kind != ResourceSet::Kind::Continuous)
      throw InputError("make_semigroup: lindblad kind needs self-adjoint jumps");
    f.generator = ComplexMatrix::Zero(d2, d2);
    for (const auto& a : resource.elements) {
      ComplexMatrix a2 = a * a;
      f.generator += kron(a.conjugate(), a) -
                     0.5 * (kron(identity(d), a2) + kron(a2.conjugate(), identity(d)));
    }
  }

  for (double t : {0.1, 1.0, 10.0})
    (void)QuantumChannel::from_superop(matrix_exp(t * f.generator));  // CPTP validation

  for (const auto& b : f.structure.commutant_basis)
    if ((f.generator * vec(b)).norm() > 1e-8)
      throw CptpError("make_semigroup: generator does not fix the commutant",
                      (f.generator * vec(b)).norm());
  return f;
}

QuantumChannel evolve(const SemigroupFamily& f, double t) {
  if (t < 0) throw InputError("evolve: negative time");
  return QuantumChannel::from_superop(matrix_exp(t * f.generator));
}

namespace {

double fixpoint_distance(const SemigroupFamily& f, double t, ReturnNorm norm) {
  ComplexMatrix diff = matrix_exp(t * f.generator) - f.structure.efix_superop;
  if (norm == ReturnNorm::Diamond) return diamond_norm_superop(diff).value;
  // Heisenberg-side map; for these semigroups the superoperator of the
  // observable action is the adjoint
  return inf_to_inf_norm(diff.adjoint()).upper;
}

}  // namespace

double return_time(const SemigroupFamily& f, double eps, ReturnNorm norm) {
  if (eps <= 0 || eps >= 2) throw InputError("return_time: eps must lie in (0, 2)");

  // gap check: every non-fixed mode must decay
  Eigen::ComplexEigenSolver<ComplexMatrix> es(f.generator);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    Complex lam = es.eigenvalues()(k);
    if (std::abs(lam) <= 1e-9) continue;  // fixed mode
    if (lam.real() > -1e-9)
      throw ConvergenceError("return_time: generator has no spectral gap");
  }

  if (fixpoint_distance(f, 0.0, norm) <= eps) return 0.0;

  double hi = 1.0;
  int guard = 0;
  while (fixpoint_distance(f, hi, norm) > eps) {
    hi *= 2.0;
    if (++guard > 40) throw ConvergenceError("return_time: no finite return time found");
  }

  // monotone decay assertion on a coarse sample
  bool monotone = true;
  double prev = fixpoint_distance(f, 0.0, norm);
  for (int k = 1; k <= 6; ++k) {
    double cur = fixpoint_distance(f, hi * k / 6.0, norm);
    if (cur > prev + 1e-9) {
      monotone = false;
      break;
    }
    prev = cur;
  }

  double lo = 0.0;
  if (monotone) {
    while (hi - lo > 1e-4) {
      double mid = 0.5 * (lo + hi);
      (fixpoint_distance(f, mid, norm) <= eps ? hi : lo) = mid;
    }
  } else {
    // earliest crossing by recursive grid refinement
    while (hi - lo > 1e-4) {
      const int steps = 32;
      double step = (hi - lo) / steps;
      double new_lo = lo, new_hi = hi;
      for (int k = 1; k <= steps; ++k) {
        double t = lo + k * step;
        if (fixpoint_distance(f, t, norm) <= eps) {
          new_lo = t - step;
          new_hi = t;
          break;
        }
      }
      lo = new_lo;
      hi = new_hi;
    }
  }
  return hi;
}

TrajectoryRecord complexity_trajectory(const SemigroupFamily& f, const std::vector<double>& grid,
                                       const SolveOptions& opts) {
  if (grid.empty()) throw InputError("complexity_trajectory: empty time grid");
  for (size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw InputError("complexity_trajectory: grid must be strictly increasing");
  if (grid.front() < 0) throw InputError("complexity_trajectory: negative time");

  TrajectoryRecord rec;
  rec.return_time_half = return_time(f, 0.5);
  rec.plateau = expected_length(f.structure, opts);

  for (double t : grid) {
    QuantumChannel phi_t = evolve(f, t);
    SolveOptions o = opts;
    if (rec.plateau.witness.size() > 0) o.extra_starts.push_back(rec.plateau.witness);
    if (f.kind == SemigroupFamily::Kind::Discrete)
      o.extra_certificates.push_back({"semigroup_time", t});
    TrajectoryPoint pt;
    pt.time = t;
    pt.estimate = complexity_estimate(phi_t, f.structure, o);
    pt.regime = t < rec.return_time_half ? "linear" : "plateau";
    rec.points.push_back(std::move(pt));
  }
  return rec;
}

std::vector<double> default_time_grid(const SemigroupFamily& f) {
  double k = return_time(f, 0.5);
  if (k <= 0) k = 1.0;
  std::vector<double> grid;
  const int n = 25;
  double lo = 0.05 * k, hi = 5.0 * k;
  for (int i = 0; i < n; ++i)
    grid.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return grid;
}

}  // namespace chancomp
