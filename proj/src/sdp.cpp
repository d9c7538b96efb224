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

#include "chancomp/sdp.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <sstream>

namespace chancomp {

namespace {

using BlockList = std::vector<ComplexMatrix>;

// <A_i, Z> = tr(A_i Z); real because both sides are Hermitian.
double constraint_inner(const SdpConstraint& a, const BlockList& z) {
  double out = 0.0;
  for (const auto& cb : a.blocks)
    for (const auto& e : cb.entries)
      out += (std::conj(e.value) * z[cb.block](e.row, e.col)).real();
  return out;
}

double blocks_inner(const BlockList& a, const BlockList& b) {
  double out = 0.0;
  for (size_t k = 0; k < a.size(); ++k)
    out += (a[k].adjoint() * b[k]).trace().real();
  return out;
}

double blocks_norm(const BlockList& a) {
  double out = 0.0;
  for (const auto& m : a) out += m.squaredNorm();
  return std::sqrt(out);
}

// Adds y_i * A_i into the accumulator blocks.
void add_scaled_constraint(BlockList& acc, const SdpConstraint& a, double y) {
  if (y == 0.0) return;
  for (const auto& cb : a.blocks)
    for (const auto& e : cb.entries) acc[cb.block](e.row, e.col) += y * e.value;
}

// Largest alpha in (0, cap] keeping Z + alpha D positive definite, computed
// through the Cholesky factor of Z.
double max_step(const BlockList& z, const BlockList& d, double cap) {
  double alpha = cap;
  for (size_t k = 0; k < z.size(); ++k) {
    Eigen::LLT<ComplexMatrix> llt(z[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    ComplexMatrix l = llt.matrixL();
    ComplexMatrix w = l.triangularView<Eigen::Lower>().solve(d[k]);
    w = l.triangularView<Eigen::Lower>().solve(w.adjoint().eval()).adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ComplexMatrix(0.5 * (w + w.adjoint())),
                                                    Eigen::EigenvaluesOnly);
    double lam = es.eigenvalues()(0);
    if (lam < 0) alpha = std::min(alpha, -1.0 / lam);
  }
  return alpha;
}

void symmetrize(BlockList& a) {
  for (auto& m : a) m = 0.5 * (m + m.adjoint()).eval();
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opts) {
  const int nb = static_cast<int>(p.block_dims.size());
  const int m = static_cast<int>(p.constraints.size());
  if (nb == 0 || m == 0) throw InputError("solve_sdp: empty problem");
  if (static_cast<int>(p.objective.size()) != nb)
    throw InputError("solve_sdp: objective must carry one matrix per block");
  int ntot = 0;
  for (int d : p.block_dims) {
    if (d <= 0) throw InputError("solve_sdp: nonpositive block dimension");
    ntot += d;
  }

  RealVector b(m);
  for (int i = 0; i < m; ++i) b(i) = p.constraints[i].rhs;

  double data_scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  for (const auto& c : p.objective)
    if (c.size() > 0) data_scale = std::max(data_scale, c.cwiseAbs().maxCoeff());

  BlockList z, sd, c_blocks;
  for (int k = 0; k < nb; ++k) {
    z.push_back(data_scale * ComplexMatrix::Identity(p.block_dims[k], p.block_dims[k]));
    sd.push_back(data_scale * ComplexMatrix::Identity(p.block_dims[k], p.block_dims[k]));
    ComplexMatrix c = p.objective[k];
    if (c.size() == 0) c = ComplexMatrix::Zero(p.block_dims[k], p.block_dims[k]);
    c_blocks.push_back(0.5 * (c + c.adjoint()));
  }
  RealVector y = RealVector::Zero(m);

  SdpSolution sol;
  sol.y = y;
  double best_score = std::numeric_limits<double>::infinity();

  auto zero_blocks = [&]() {
    BlockList out;
    for (int k = 0; k < nb; ++k)
      out.push_back(ComplexMatrix::Zero(p.block_dims[k], p.block_dims[k]));
    return out;
  };

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    // residuals
    RealVector rp(m);
    for (int i = 0; i < m; ++i) rp(i) = b(i) - constraint_inner(p.constraints[i], z);
    BlockList rd = c_blocks;
    for (size_t k = 0; k < rd.size(); ++k) rd[k] -= sd[k];
    for (int i = 0; i < m; ++i) add_scaled_constraint(rd, p.constraints[i], -y(i));

    double pobj = blocks_inner(c_blocks, z);
    double dobj = b.dot(y);
    double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    double pres = rp.norm() / (1.0 + b.norm());
    double dres = blocks_norm(rd) / (1.0 + blocks_norm(c_blocks));

    double score = std::max({gap, pres, dres});
    if (score < best_score) {
      best_score = score;
      sol.primal_value = pobj;
      sol.dual_value = dobj;
      sol.gap = gap;
      sol.z = z;
      sol.dual_slack = sd;
      sol.y = y;
      sol.iterations = iter;
    }

    if (opts.verbose)
      std::fprintf(stderr, "sdp iter %3d  pobj %.6e dobj %.6e gap %.2e pres %.2e dres %.2e\n",
                   iter, pobj, dobj, gap, pres, dres);

    if (score < opts.tol) {
      sol.converged = true;
      return sol;
    }
    // the Schur system conditioning eventually limits attainable accuracy;
    // accept the best iterate once it stops improving at an acceptable level
    if (best_score < opts.fallback_tol && score > 10 * best_score) {
      sol.converged = true;
      return sol;
    }

    double mu = blocks_inner(z, sd) / ntot;

    // inverses of the dual slack blocks
    BlockList sinv;
    for (int k = 0; k < nb; ++k) {
      Eigen::LLT<ComplexMatrix> llt(sd[k]);
      if (llt.info() != Eigen::Success) {
        if (best_score < opts.fallback_tol) {
          sol.converged = true;
          return sol;
        }
        throw ConvergenceError("solve_sdp: dual slack lost positive definiteness");
      }
      sinv.push_back(llt.solve(ComplexMatrix::Identity(p.block_dims[k], p.block_dims[k])));
    }

    // B_i = Z A_i S^{-1}, assembled from the sparse constraint entries
    std::vector<BlockList> bmats(m);
    for (int i = 0; i < m; ++i) {
      bmats[i] = zero_blocks();
      for (const auto& cb : p.constraints[i].blocks)
        for (const auto& e : cb.entries)
          bmats[i][cb.block].noalias() +=
              z[cb.block].col(e.row) * (e.value * sinv[cb.block].row(e.col));
    }

    Eigen::MatrixXd schur(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double v = 0.0;
        for (const auto& cb : p.constraints[j].blocks)
          for (const auto& e : cb.entries)
            v += (std::conj(e.value) * bmats[i][cb.block](e.row, e.col)).real();
        schur(i, j) = v;
      }
    schur = 0.5 * (schur + schur.transpose()).eval();
    Eigen::LDLT<Eigen::MatrixXd> schur_fact(schur);
    if (schur_fact.info() != Eigen::Success || !schur_fact.isPositive()) {
      if (best_score < opts.fallback_tol) {
        sol.converged = true;
        return sol;
      }
      throw ConvergenceError("solve_sdp: Schur complement factorization failed");
    }

    // direction for a given complementarity target R: Z S + dZ S + Z dS = R
    auto solve_direction = [&](const BlockList& r, RealVector& dy, BlockList& dz,
                               BlockList& dsd) {
      // rhs_i = rp_i - tr(A_i (R - Z S - Z Rd) S^{-1})
      RealVector rhs(m);
      BlockList core;
      for (int k = 0; k < nb; ++k)
        core.push_back(((r[k] - z[k] * (sd[k] + rd[k])) * sinv[k]).eval());
      for (int i = 0; i < m; ++i)
        rhs(i) = rp(i) - constraint_inner(p.constraints[i], core);

      dy = schur_fact.solve(rhs);
      dsd = rd;
      for (int i = 0; i < m; ++i) add_scaled_constraint(dsd, p.constraints[i], -dy(i));
      dz = BlockList();
      for (int k = 0; k < nb; ++k)
        dz.push_back(((r[k] - z[k] * sd[k] - z[k] * dsd[k]) * sinv[k]).eval());
      symmetrize(dz);
    };

    // predictor (affine scaling, R = 0)
    RealVector dy_a;
    BlockList dz_a, dsd_a;
    solve_direction(zero_blocks(), dy_a, dz_a, dsd_a);
    double ap = max_step(z, dz_a, 1.0);
    double ad = max_step(sd, dsd_a, 1.0);

    double mu_aff = 0.0;
    {
      BlockList zt = z, st = sd;
      for (int k = 0; k < nb; ++k) {
        zt[k] += ap * dz_a[k];
        st[k] += ad * dsd_a[k];
      }
      mu_aff = blocks_inner(zt, st) / ntot;
    }
    double sigma = std::pow(std::clamp(mu_aff / std::max(mu, 1e-300), 0.0, 1.0), 3);

    // corrector: R = sigma*mu*I - dZ_a dS_a
    BlockList r = zero_blocks();
    for (int k = 0; k < nb; ++k) {
      r[k] = sigma * mu * ComplexMatrix::Identity(p.block_dims[k], p.block_dims[k]);
      r[k] -= dz_a[k] * dsd_a[k];
    }
    RealVector dy;
    BlockList dz, dsd;
    solve_direction(r, dy, dz, dsd);

    double tau = opts.step_fraction;
    double alpha_p = tau * max_step(z, dz, 1.0 / tau);
    double alpha_d = tau * max_step(sd, dsd, 1.0 / tau);
    alpha_p = std::min(alpha_p, 1.0);
    alpha_d = std::min(alpha_d, 1.0);
    if (alpha_p <= 0 || alpha_d <= 0) {
      if (best_score < opts.fallback_tol) {
        sol.converged = true;
        return sol;
      }
      throw ConvergenceError("solve_sdp: step length collapsed to zero");
    }

    for (int k = 0; k < nb; ++k) {
      z[k] += alpha_p * dz[k];
      sd[k] += alpha_d * dsd[k];
    }
    symmetrize(z);
    symmetrize(sd);
    y += alpha_d * dy;
  }

  if (best_score < opts.fallback_tol) {
    sol.converged = true;
    return sol;
  }
  std::ostringstream msg;
  msg << "solve_sdp: no convergence after " << opts.max_iter
      << " iterations, relative gap " << sol.gap;
  throw ConvergenceError(msg.str());
}

}  // namespace chancomp
