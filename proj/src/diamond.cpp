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

#include "chancomp/diamond.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

#include "chancomp/sdp.hpp"

namespace chancomp {

namespace {

constexpr double kRoot2Inv = 0.7071067811865476;

// Orthonormal Hermitian basis of H_n indexed 0..n^2-1, emitted as sparse
// entries: diagonal units, then real and imaginary off-diagonal pairs.
void for_each_hermitian_basis(int n, const std::function<void(const std::vector<SparseEntry>&)>& f) {
  std::vector<SparseEntry> e;
  for (int p = 0; p < n; ++p) {
    e = {{p, p, Complex(1, 0)}};
    f(e);
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      e = {{p, q, Complex(kRoot2Inv, 0)}, {q, p, Complex(kRoot2Inv, 0)}};
      f(e);
      e = {{p, q, Complex(0, -kRoot2Inv)}, {q, p, Complex(0, kRoot2Inv)}};
      f(e);
    }
}

double sparse_inner(const std::vector<SparseEntry>& a, const ComplexMatrix& m) {
  double out = 0.0;
  for (const auto& e : a) out += (std::conj(e.value) * m(e.row, e.col)).real();
  return out;
}

}  // namespace

DiamondResult diamond_norm_superop(const ComplexMatrix& superop) {
  ComplexMatrix j = choi_from_superop(superop);
  j = 0.5 * (j + j.adjoint());  // Hermitian-preserving map -> Hermitian Choi
  const int n = static_cast<int>(j.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(n))));

  DiamondResult res;
  if (j.norm() < 1e-14) return res;

  // blocks: Y1, Y2 (on input x output), lambda, slack on the input factor
  SdpProblem prob;
  prob.block_dims = {n, n, 1, d};
  prob.objective.assign(4, ComplexMatrix());
  prob.objective[2] = ComplexMatrix::Identity(1, 1);

  // Y1 - Y2 = Choi
  for_each_hermitian_basis(n, [&](const std::vector<SparseEntry>& h) {
    SdpConstraint c;
    c.blocks.push_back({0, h});
    std::vector<SparseEntry> neg = h;
    for (auto& e : neg) e.value = -e.value;
    c.blocks.push_back({1, neg});
    c.rhs = sparse_inner(h, j);
    prob.constraints.push_back(std::move(c));
  });

  // tr_out(Y1 + Y2) - lambda I + S = 0; input is the slow tensor factor
  const int dout = d;
  for_each_hermitian_basis(d, [&](const std::vector<SparseEntry>& g) {
    SdpConstraint c;
    std::vector<SparseEntry> lifted;
    double trace_g = 0.0;
    for (const auto& e : g) {
      if (e.row == e.col) trace_g += e.value.real();
      for (int t = 0; t < dout; ++t)
        lifted.push_back({e.row * dout + t, e.col * dout + t, e.value});
    }
    c.blocks.push_back({0, lifted});
    c.blocks.push_back({1, lifted});
    if (trace_g != 0.0)
      c.blocks.push_back({2, {{0, 0, Complex(-trace_g, 0)}}});
    c.blocks.push_back({3, g});
    c.rhs = 0.0;
    prob.constraints.push_back(std::move(c));
  });

  SdpOptions so; so.verbose = std::getenv("CHANCOMP_SDP_VERBOSE") != nullptr;
  SdpSolution sol = solve_sdp(prob, so);
  // minimization: the primal objective certifies from above, the dual from below
  res.upper = sol.primal_value;
  res.lower = sol.dual_value;
  res.value = 0.5 * (res.upper + res.lower);
  res.gap = res.upper - res.lower;
  res.iterations = sol.iterations;
  return res;
}

DiamondResult diamond_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim() != b.dim()) throw InputError("diamond_distance: dimension mismatch");
  return diamond_norm_superop(a.superop() - b.superop());
}

}  // namespace chancomp
