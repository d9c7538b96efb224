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

#include "chancomp/channel.hpp"

#include <cmath>
#include <numeric>

namespace chancomp {

ComplexMatrix choi_from_superop(const ComplexMatrix& superop) {
  const int d2 = static_cast<int>(superop.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));
  if (d * d != d2 || superop.cols() != d2) throw InputError("choi_from_superop: bad size");
  ComplexMatrix choi(d2, d2);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int b = 0; b < d; ++b)
        for (int j = 0; j < d; ++j)
          choi(a + i * d, b + j * d) = superop(a + b * d, i + j * d);
  return choi;
}

ComplexMatrix superop_from_choi(const ComplexMatrix& choi) {
  return choi_from_superop(choi);  // the reshuffle is an involution
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, double tol) {
  const int d2 = static_cast<int>(choi.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (choi + choi.adjoint()));
  double top = es.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<ComplexMatrix> kraus;
  for (int k = d2 - 1; k >= 0; --k) {  // descending eigenvalue order
    double lam = es.eigenvalues()(k);
    if (lam < -tol * std::max(1.0, top))
      throw CptpError("channel is not completely positive", -lam);
    if (lam <= tol * std::max(1.0, top)) continue;
    ComplexVector w = es.eigenvectors().col(k);
    fix_phase(w);
    kraus.push_back(std::sqrt(lam) * unvec(w, d, d));
  }
  if (kraus.empty()) kraus.push_back(ComplexMatrix::Zero(d, d));
  return kraus;
}

namespace {

ComplexMatrix superop_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  const int d = static_cast<int>(kraus.front().rows());
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : kraus) m += kron(k.conjugate(), k);
  return m;
}

}  // namespace

QuantumChannel QuantumChannel::from_kraus(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw InputError("from_kraus: empty Kraus list");
  const int d = static_cast<int>(kraus.front().rows());
  for (const auto& k : kraus) {
    check_finite(k, "Kraus operator");
    if (k.rows() != d || k.cols() != d)
      throw InputError("from_kraus: Kraus operators must be square and equally sized");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  double residual = (sum - identity(d)).norm();
  if (residual > kCptpTol)
    throw CptpError("from_kraus: completeness sum deviates from identity", residual);

  QuantumChannel ch;
  ch.dim_ = d;
  ch.kraus_ = kraus;
  ch.superop_ = superop_from_kraus(kraus);
  ch.choi_ = choi_from_superop(ch.superop_);
  ch.validate();
  return ch;
}

QuantumChannel QuantumChannel::from_superop(const ComplexMatrix& superop) {
  check_finite(superop, "superoperator");
  QuantumChannel ch;
  ch.choi_ = choi_from_superop(superop);
  ch.dim_ = static_cast<int>(std::lround(std::sqrt(double(superop.rows()))));
  ch.kraus_ = kraus_from_choi(ch.choi_, kCptpTol);
  ch.superop_ = superop;
  // trace preservation: partial trace of choi over the output factor is I
  ComplexMatrix tp = partial_trace(ch.choi_, SubsystemShape{{ch.dim_, ch.dim_}}, {0});
  double residual = (tp - identity(ch.dim_)).norm();
  if (residual > kCptpTol)
    throw CptpError("from_superop: map is not trace preserving", residual);
  ch.validate();
  return ch;
}

QuantumChannel QuantumChannel::identity_channel(int dim) {
  return from_kraus({identity(dim)});
}

void QuantumChannel::validate() const {
  // dual unitality
  ComplexMatrix dual_i = apply(identity(dim_), true);
  double uni = (dual_i - identity(dim_)).norm();
  if (uni > 1e-7) throw CptpError("channel dual is not unital", uni);
  // representation consistency
  double rt = (superop_ - superop_from_kraus(kraus_)).norm();
  if (rt > 1e-7 * std::max(1.0, superop_.norm()))
    throw CptpError("channel representations are inconsistent", rt);
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& x, bool dual) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw InputError("apply: dimension mismatch");
  ComplexVector v = vec(x);
  ComplexVector out = dual ? ComplexVector(superop_.adjoint() * v) : ComplexVector(superop_ * v);
  return unvec(out, dim_, dim_);
}

QuantumChannel combine(CombineKind kind, const std::vector<QuantumChannel>& channels,
                       const std::vector<double>& weights) {
  if (channels.empty()) throw InputError("combine: empty channel list");
  switch (kind) {
    case CombineKind::Compose: {
      const int d = channels.front().dim();
      ComplexMatrix m = ComplexMatrix::Identity(d * d, d * d);
      for (const auto& ch : channels) {
        if (ch.dim() != d) throw InputError("combine: dimension mismatch in compose");
        m = m * ch.superop();
      }
      return QuantumChannel::from_superop(m);
    }
    case CombineKind::Mix: {
      if (weights.size() != channels.size())
        throw InputError("combine: mix needs one weight per channel");
      double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      if (std::abs(total - 1.0) > 1e-12)
        throw InputError("combine: mix weights must sum to 1");
      const int d = channels.front().dim();
      ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
      for (size_t i = 0; i < channels.size(); ++i) {
        if (weights[i] < 0) throw InputError("combine: negative mix weight");
        if (channels[i].dim() != d) throw InputError("combine: dimension mismatch in mix");
        m += weights[i] * channels[i].superop();
      }
      return QuantumChannel::from_superop(m);
    }
    case CombineKind::Tensor: {
      std::vector<ComplexMatrix> kraus = channels.front().kraus();
      for (size_t c = 1; c < channels.size(); ++c) {
        std::vector<ComplexMatrix> next;
        for (const auto& a : kraus)
          for (const auto& b : channels[c].kraus()) next.push_back(kron(a, b));
        kraus = std::move(next);
      }
      return QuantumChannel::from_kraus(kraus);
    }
  }
  throw InputError("combine: unknown kind");
}

QuantumChannel unitary_mixture(const std::vector<ComplexMatrix>& unitaries,
                               const std::vector<double>& mu) {
  if (unitaries.size() != mu.size())
    throw InputError("unitary_mixture: one probability per unitary required");
  if (unitaries.empty()) throw InputError("unitary_mixture: empty list");
  double total = std::accumulate(mu.begin(), mu.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw InputError("unitary_mixture: probabilities must sum to 1");
  const int d = static_cast<int>(unitaries.front().rows());
  std::vector<ComplexMatrix> kraus;
  for (size_t i = 0; i < unitaries.size(); ++i) {
    const auto& u = unitaries[i];
    if (mu[i] < 0) throw InputError("unitary_mixture: negative probability");
    if (u.rows() != d || u.cols() != d) throw InputError("unitary_mixture: dimension mismatch");
    if ((u * u.adjoint() - identity(d)).norm() > 1e-9)
      throw InputError("unitary_mixture: element is not unitary");
    if (mu[i] > 0) kraus.push_back(std::sqrt(mu[i]) * u);
  }
  return QuantumChannel::from_kraus(kraus);
}

}  // namespace chancomp
