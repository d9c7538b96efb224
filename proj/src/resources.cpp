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

#include "chancomp/resources.hpp"

#include <algorithm>
#include <cmath>

namespace chancomp {

void ResourceSet::validate() const {
  if (dim <= 0) throw InputError("ResourceSet: nonpositive dimension");
  if (elements.empty()) throw InputError("ResourceSet: empty element list");
  for (const auto& s : elements) {
    check_finite(s, "resource element");
    if (s.rows() != dim || s.cols() != dim)
      throw InputError("ResourceSet: element dimension mismatch");
    if (kind == Kind::Discrete) {
      if ((s * s.adjoint() - identity(dim)).norm() > 1e-9)
        throw InputError("ResourceSet: discrete element is not unitary");
    } else {
      if ((s - s.adjoint()).norm() > 1e-9 * (1.0 + s.norm()))
        throw InputError("ResourceSet: continuous element is not self-adjoint");
    }
  }
}

ResourceSet symmetrize(const ResourceSet& s) {
  s.validate();
  ResourceSet out = s;
  if (s.kind == ResourceSet::Kind::Continuous) {
    out.symmetrized = true;  // self-adjoint generators are already symmetric
    return out;
  }
  auto contains = [&](const ComplexMatrix& m) {
    return std::any_of(out.elements.begin(), out.elements.end(),
                       [&](const ComplexMatrix& e) { return (e - m).norm() < 1e-12; });
  };
  std::vector<ComplexMatrix> adjoints;
  for (const auto& e : out.elements)
    if (!contains(e.adjoint())) adjoints.push_back(e.adjoint());
  out.elements.insert(out.elements.end(), adjoints.begin(), adjoints.end());
  if (!contains(identity(s.dim))) out.elements.push_back(identity(s.dim));
  out.symmetrized = true;
  return out;
}

namespace {

// Superoperator of x -> [s, x] = s x - x s under column-stacking vec.
ComplexMatrix commutator_superop(const ComplexMatrix& s) {
  const int d = static_cast<int>(s.rows());
  return kron(identity(d), s) - kron(s.transpose(), identity(d));
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  double tol = default_rank_tol(m);
  ComplexVector inv = ComplexVector::Zero(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (top > 0 && sv(k) > tol) inv(k) = Complex(1.0 / sv(k), 0.0);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

LipschitzStructure build_structure(const ResourceSet& s_in) {
  ResourceSet s = s_in.symmetrized ? s_in : symmetrize(s_in);
  s.validate();
  const int d = s.dim;
  const int d2 = d * d;
  const int k = static_cast<int>(s.elements.size());

  LipschitzStructure l;
  l.resource = s;
  l.comm_superops.reserve(k);
  l.comm_pinv.reserve(k);

  ComplexMatrix stacked(static_cast<Eigen::Index>(k) * d2, d2);
  for (int i = 0; i < k; ++i) {
    ComplexMatrix t = commutator_superop(s.elements[i]);
    stacked.block(static_cast<Eigen::Index>(i) * d2, 0, d2, d2) = t;
    if (t.norm() > 1e-12) ++l.active_count;
    l.comm_pinv.push_back(pseudo_inverse(t));
    l.comm_superops.push_back(std::move(t));
  }

  double tol = default_rank_tol(stacked);
  auto comm_vecs = nullspace_basis(stacked, tol);
  // conditioning guard: the commutant dimension must be stable under a 10x
  // looser tolerance, otherwise the answer is numerically ambiguous
  if (nullspace_basis(stacked, tol * 10).size() != comm_vecs.size())
    throw ConditioningError("build_structure: commutant dimension is tolerance-sensitive");

  ComplexMatrix v(d2, static_cast<Eigen::Index>(comm_vecs.size()));
  for (size_t c = 0; c < comm_vecs.size(); ++c) {
    v.col(static_cast<Eigen::Index>(c)) = comm_vecs[c];
    l.commutant_basis.push_back(unvec(comm_vecs[c], d, d));
  }
  for (const auto& mz : nullspace_basis(v.adjoint(), 1e-9))
    l.mean_zero_basis.push_back(unvec(mz, d, d));

  // HS-orthogonal projection onto the commutant; for symmetric S this is the
  // trace-preserving conditional expectation and in particular a channel
  l.efix_superop = v * v.adjoint();
  l.efix_channel = QuantumChannel::from_superop(l.efix_superop);

  if (!l.mean_zero_basis.empty()) {
    ComplexMatrix lap = ComplexMatrix::Zero(d2, d2);
    for (const auto& t : l.comm_superops) lap += t.adjoint() * t;
    ComplexMatrix b(d2, l.mean_zero_dim());
    for (int c = 0; c < l.mean_zero_dim(); ++c) b.col(c) = vec(l.mean_zero_basis[c]);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
        ComplexMatrix(b.adjoint() * lap * b));
    l.lambda_gap = es.eigenvalues()(0);
  }
  return l;
}

double lipschitz_norm(const ComplexMatrix& x, const LipschitzStructure& l,
                      NormVariant variant) {
  if (x.rows() != l.dim() || x.cols() != l.dim())
    throw InputError("lipschitz_norm: dimension mismatch");
  check_finite(x, "lipschitz_norm argument");
  const auto& elems = l.resource.elements;
  switch (variant) {
    case NormVariant::Inf: {
      double best = 0.0;
      for (const auto& s : elems)
        best = std::max(best, operator_norm(s * x - x * s));
      return best;
    }
    case NormVariant::L2: {
      ComplexMatrix acc = ComplexMatrix::Zero(l.dim(), l.dim());
      for (const auto& s : elems) {
        ComplexMatrix c = s * x - x * s;
        acc += c.adjoint() * c;
      }
      return std::sqrt(operator_norm(acc));
    }
    case NormVariant::Gradient: {
      if (l.resource.kind != ResourceSet::Kind::Continuous)
        throw InputError("lipschitz_norm: gradient variant needs self-adjoint generators");
      auto gamma = [&](const ComplexMatrix& y) {
        ComplexMatrix acc = ComplexMatrix::Zero(l.dim(), l.dim());
        for (const auto& a : elems) {
          ComplexMatrix c = a * y - y * a;
          acc += c.adjoint() * c;
        }
        return std::sqrt(operator_norm(acc));
      };
      return std::max(gamma(x), gamma(x.adjoint()));
    }
  }
  throw InputError("lipschitz_norm: unknown variant");
}

ComplexMatrix mean_zero_project(const ComplexMatrix& x, const LipschitzStructure& l) {
  if (x.rows() != l.dim() || x.cols() != l.dim())
    throw InputError("mean_zero_project: dimension mismatch");
  ComplexVector v = vec(x);
  return unvec(ComplexVector(v - l.efix_superop * v), l.dim(), l.dim());
}

ResourceSet join_resources(const std::vector<ResourceSet>& parts) {
  if (parts.empty()) throw InputError("join_resources: empty list");
  std::vector<int> dims;
  for (const auto& p : parts) {
    p.validate();
    if (p.kind != parts.front().kind)
      throw InputError("join_resources: mixed discrete/continuous kinds");
    dims.push_back(p.dim);
  }
  ResourceSet out;
  out.kind = parts.front().kind;
  out.dim = 1;
  for (int d : dims) out.dim *= d;
  for (size_t i = 0; i < parts.size(); ++i)
    for (const auto& s : parts[i].elements)
      out.elements.push_back(embed_factor(s, dims, static_cast<int>(i)));
  return out;
}

ResourceSet amplify_resource(const ResourceSet& s, int ancilla_dim) {
  if (ancilla_dim <= 0) throw InputError("amplify_resource: nonpositive ancilla dimension");
  s.validate();
  ResourceSet out;
  out.kind = s.kind;
  out.dim = ancilla_dim * s.dim;
  out.symmetrized = s.symmetrized;
  for (const auto& e : s.elements) out.elements.push_back(kron(identity(ancilla_dim), e));
  return out;
}

}  // namespace chancomp
