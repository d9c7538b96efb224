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

#include "chancomp/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "chancomp/diamond.hpp"
#include "chancomp/groups.hpp"

namespace chancomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Feasible set K = {mean-zero} ∩ {|||x|||_inf <= 1}, handled by Dykstra
// cycling over the subspace and one spectral ball per active resource.
// Ball steps are approximate (commutator clipping through the pseudo-inverse),
// so every candidate is finally *certified*: re-projected onto the subspace
// and rescaled by its exact Lipschitz norm. Only certified points produce
// reported lower bounds.
// ---------------------------------------------------------------------------

class FeasibleSet {
 public:
  FeasibleSet(const LipschitzStructure& l, const SolveOptions& opts) : l_(l), opts_(opts) {
    for (size_t i = 0; i < l.comm_superops.size(); ++i)
      if (l.comm_superops[i].norm() > 1e-12) active_.push_back(static_cast<int>(i));
  }

  ComplexMatrix project(ComplexMatrix x) const {
    return project_impl(std::move(x), opts_.dykstra_tol, opts_.dykstra_max_cycles);
  }

  // Coarser budget for the projections inside the ascent loop; accuracy is
  // recovered by certify() anyway.
  ComplexMatrix project_coarse(ComplexMatrix x) const {
    return project_impl(std::move(x), std::max(1e-7, opts_.dykstra_tol),
                        std::min(400, opts_.dykstra_max_cycles));
  }

  // Exact member of K derived from x; scaling preserves mean-zero. The
  // candidate is hermitized first: complexity is a supremum over self-adjoint
  // observables, and self-adjointness is what makes witness bounds combine
  // additively across tensor factors.
  ComplexMatrix certify(const ComplexMatrix& x) const {
    ComplexMatrix m = mean_zero_project(ComplexMatrix(0.5 * (x + x.adjoint())), l_);
    double n = lipschitz_norm(m, l_, NormVariant::Inf);
    if (n > 1.0) m /= n;
    return m;
  }

  const LipschitzStructure& structure() const { return l_; }

 private:
  ComplexMatrix project_impl(ComplexMatrix x, double tol, int max_cycles) const {
    const int d = l_.dim();
    const size_t nsets = active_.size() + 1;
    std::vector<ComplexMatrix> corr(nsets, ComplexMatrix::Zero(d, d));
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
      double moved = 0.0;
      for (size_t k = 0; k < nsets; ++k) {
        ComplexMatrix input = x + corr[k];
        ComplexMatrix projected =
            (k == 0) ? mean_zero_project(input, l_) : ball_project(input, active_[k - 1]);
        corr[k] = input - projected;
        moved += (projected - x).norm();
        x = std::move(projected);
      }
      if (moved < tol) break;
    }
    return x;
  }

  ComplexMatrix ball_project(const ComplexMatrix& x, int si) const {
    const auto& s = l_.resource.elements[si];
    ComplexMatrix y = s * x - x * s;
    Eigen::JacobiSVD<ComplexMatrix> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() == 0 || svd.singularValues()(0) <= 1.0) return x;
    RealVector clipped = svd.singularValues().cwiseMin(1.0);
    ComplexMatrix yc = svd.matrixU() * clipped.cast<Complex>().asDiagonal() *
                       svd.matrixV().adjoint();
    ComplexVector dx = l_.comm_pinv[si] * vec(ComplexMatrix(yc - y));
    return x + unvec(dx, l_.dim(), l_.dim());
  }

  const LipschitzStructure& l_;
  const SolveOptions& opts_;
  std::vector<int> active_;
};

// ---------------------------------------------------------------------------
// Supergradient ascent of x -> ||unvec(M vec x)||_inf over K.
// ---------------------------------------------------------------------------

struct AscentOutcome {
  double value = 0.0;
  ComplexMatrix witness;
  int iterations = 0;
};

AscentOutcome ascend(const ComplexMatrix& m, const FeasibleSet& fs,
                     const std::vector<ComplexMatrix>& starts, const SolveOptions& opts,
                     double target) {
  const int d = fs.structure().dim();
  AscentOutcome best;
  best.witness = ComplexMatrix::Zero(d, d);

  auto objective = [&](const ComplexMatrix& w) {
    return operator_norm(unvec(ComplexVector(m * vec(w)), d, d));
  };

  auto hermitize = [](const ComplexMatrix& x) {
    return ComplexMatrix(0.5 * (x + x.adjoint()));
  };

  for (const auto& start : starts) {
    if (best.value >= target - 1e-9) return best;
    ComplexMatrix x = hermitize(fs.project_coarse(hermitize(start)));
    int stall = 0;
    double local_best = -1.0;
    for (int it = 0; it < opts.ascent_iters; ++it) {
      ComplexMatrix w = fs.certify(x);
      double val = objective(w);
      ++best.iterations;
      if (val > best.value + opts.tol) {
        best.value = val;
        best.witness = w;
      }
      if (best.value >= target - 1e-9) return best;
      if (val > local_best + 1e-7) {
        local_best = val;
        stall = 0;
      } else if (++stall > 12) {
        break;
      }

      ComplexMatrix y = unvec(ComplexVector(m * vec(x)), d, d);
      Eigen::JacobiSVD<ComplexMatrix> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
      if (svd.singularValues().size() == 0) break;
      ComplexMatrix uv = svd.matrixU().col(0) * svd.matrixV().col(0).adjoint();
      ComplexMatrix g = unvec(ComplexVector(m.adjoint() * vec(uv)), d, d);
      double gn = g.norm();
      if (gn < 1e-14) break;
      double eta = opts.step0 / std::sqrt(1.0 + it);
      x = hermitize(fs.project_coarse(x + (eta / gn) * hermitize(g)));
    }
  }
  return best;
}

std::vector<ComplexMatrix> make_starts(const LipschitzStructure& l, const SolveOptions& opts) {
  std::vector<ComplexMatrix> starts = opts.extra_starts;
  int canonical = std::min<int>(3, l.mean_zero_dim());
  for (int k = 0; k < canonical; ++k) {
    starts.push_back(l.mean_zero_basis[k]);
    starts.push_back(0.5 * (l.mean_zero_basis[k] + l.mean_zero_basis[k].adjoint()));
  }
  Rng rng(opts.seed);
  for (int r = 0; r < opts.restarts; ++r)
    starts.push_back(ginibre_hermitian(l.dim(), rng));
  return starts;
}

double gap_certificate(const LipschitzStructure& l, double prefactor) {
  if (l.lambda_gap <= 1e-12) return kInf;
  return prefactor * std::sqrt(double(l.active_count) * l.dim() / l.lambda_gap);
}

ComplexityEstimate estimate_impl(const QuantumChannel& phi, const LipschitzStructure& l,
                                 const SolveOptions& opts, bool efix_mode) {
  if (phi.dim() != l.dim()) throw InputError("complexity_estimate: dimension mismatch");
  ComplexityEstimate est;
  est.seed = opts.seed;
  est.witness = ComplexMatrix::Zero(l.dim(), l.dim());

  if (l.mean_zero_dim() == 0) {
    est.certificates.push_back({"trivial_mean_zero", 0.0});
    return est;
  }

  ComplexMatrix m = phi.superop().adjoint() -
                    ComplexMatrix::Identity(l.dim() * l.dim(), l.dim() * l.dim());

  // upper certificates first: they double as an early-stop target ---------
  std::optional<double> word_length;
  if (l.resource.kind == ResourceSet::Kind::Discrete)
    word_length = mean_word_length(l.resource);

  if (efix_mode) {
    // objective reduces to sup ||x||_inf over K: ||x||_inf <= ||x||_HS and
    // lambda_gap ||x||_HS^2 <= sum_s ||[s,x]||_HS^2 <= |S| d
    double gap = gap_certificate(l, 1.0);
    if (gap < kInf) est.certificates.push_back({"spectral_gap", gap});
    if (word_length) est.certificates.push_back({"word_length_mean", *word_length});
  } else {
    double gap = gap_certificate(l, 2.0);
    if (gap < kInf) est.certificates.push_back({"spectral_gap", gap});
    if (opts.use_diamond_certificate) {
      double el_upper = gap_certificate(l, 1.0);
      if (word_length) el_upper = std::min(el_upper, *word_length);
      if (el_upper < kInf) {
        DiamondResult dia = diamond_distance(phi, QuantumChannel::identity_channel(phi.dim()));
        est.certificates.push_back(
            {"expected_length_times_diamond", el_upper * dia.upper});
      }
    }
  }
  for (const auto& c : opts.extra_certificates) est.certificates.push_back(c);

  est.upper = kInf;
  for (const auto& c : est.certificates) est.upper = std::min(est.upper, c.value);
  if (est.upper == kInf)
    est.warnings.push_back("no finite upper certificate available");

  FeasibleSet fs(l, opts);
  AscentOutcome asc =
      ascend(m, fs, make_starts(l, opts), opts, std::min(est.upper, opts.lower_target));
  est.lower = asc.value;
  est.witness = asc.witness;
  est.iterations = asc.iterations;

  if (est.upper < est.lower) {
    est.warnings.push_back("certificate fell below the witnessed lower bound");
    est.upper = est.lower;
  }
  return est;
}

}  // namespace

ComplexityEstimate complexity_estimate(const QuantumChannel& phi, const LipschitzStructure& l,
                                       const SolveOptions& opts) {
  return estimate_impl(phi, l, opts, false);
}

ComplexityEstimate expected_length(const LipschitzStructure& l, const SolveOptions& opts) {
  return estimate_impl(l.efix(), l, opts, true);
}

ComplexityEstimate cb_complexity_estimate(const QuantumChannel& phi, const LipschitzStructure& l,
                                          const SolveOptions& opts) {
  std::vector<int> levels = opts.ancilla_levels;
  if (levels.empty()) levels = {1, 2, l.dim()};
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.front() < 1) throw InputError("cb_complexity_estimate: ancilla level < 1");

  ComplexityEstimate best;
  best.seed = opts.seed;

  // level-uniform certificates, computed first so every level can stop early
  std::optional<double> word_length;
  if (l.resource.kind == ResourceSet::Kind::Discrete)
    word_length = mean_word_length(l.resource);
  DiamondResult dia = diamond_distance(phi, QuantumChannel::identity_channel(phi.dim()));
  if (word_length)
    best.certificates.push_back({"word_length_times_diamond", *word_length * dia.upper});
  for (const auto& c : opts.extra_certificates) best.certificates.push_back(c);
  double known_upper = kInf;
  for (const auto& c : best.certificates) known_upper = std::min(known_upper, c.value);

  ComplexMatrix base_witness;
  int prev_level = 0;
  ComplexMatrix prev_witness;
  int truncation_level = 1;

  for (int m : levels) {
    SolveOptions om = opts;
    om.use_diamond_certificate = false;
    om.extra_certificates.clear();
    om.lower_target = std::min(om.lower_target, known_upper);
    ComplexityEstimate em;
    if (m == 1) {
      em = estimate_impl(phi, l, om, false);
      base_witness = em.witness;
    } else {
      LipschitzStructure lm = build_structure(amplify_resource(l.resource, m));
      QuantumChannel phim = combine(
          CombineKind::Tensor, {QuantumChannel::identity_channel(m), phi});
      // caller-provided starts are base-level observables; lift them with an
      // identity ancilla leg
      om.extra_starts.clear();
      for (const auto& s : opts.extra_starts) om.extra_starts.push_back(kron(identity(m), s));
      if (base_witness.size() > 0)
        om.extra_starts.push_back(kron(identity(m), base_witness));
      if (prev_level > 1 && m % prev_level == 0)
        om.extra_starts.push_back(kron(identity(m / prev_level), prev_witness));
      em = estimate_impl(phim, lm, om, false);
    }
    if (em.lower >= best.lower) {
      best.lower = em.lower;
      best.witness = em.witness;
      truncation_level = m;
    }
    best.iterations += em.iterations;
    prev_level = m;
    prev_witness = em.witness;
  }

  if (best.certificates.empty()) {
    // fall back to the largest computed level; not uniform over all ancillas
    int m = levels.back();
    LipschitzStructure lm =
        m == 1 ? l : build_structure(amplify_resource(l.resource, m));
    double gap = gap_certificate(lm, 1.0);
    if (gap < kInf) {
      best.certificates.push_back({"spectral_gap_times_diamond", gap * dia.upper});
      best.warnings.push_back("upper bound truncated at ancilla level " + std::to_string(m));
    }
  }

  best.upper = kInf;
  for (const auto& c : best.certificates) best.upper = std::min(best.upper, c.value);
  if (best.upper == kInf)
    best.warnings.push_back("no finite upper certificate available");
  if (best.upper < best.lower) {
    best.warnings.push_back("certificate fell below the witnessed lower bound");
    best.upper = best.lower;
  }
  (void)truncation_level;
  return best;
}

IntervalResult inf_to_inf_norm(const ComplexMatrix& superop, const SolveOptions& opts) {
  const int d2 = static_cast<int>(superop.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));
  if (d * d != d2 || superop.cols() != d2) throw InputError("inf_to_inf_norm: bad size");

  IntervalResult res;
  std::vector<ComplexMatrix> starts = {identity(d)};
  Rng rng(opts.seed);
  for (int r = 0; r < opts.restarts; ++r) starts.push_back(haar_unitary(d, rng));

  for (auto x : starts) {
    for (int it = 0; it < 40; ++it) {
      ComplexMatrix y = unvec(ComplexVector(superop * vec(x)), d, d);
      Eigen::JacobiSVD<ComplexMatrix> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
      double val = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
      res.lower = std::max(res.lower, val);
      ComplexMatrix uv = svd.matrixU().col(0) * svd.matrixV().col(0).adjoint();
      ComplexMatrix g = unvec(ComplexVector(superop.adjoint() * vec(uv)), d, d);
      // best unit-ball point for a linear objective <g, x> is the polar unitary
      Eigen::JacobiSVD<ComplexMatrix> pol(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
      ComplexMatrix next = pol.matrixU() * pol.matrixV().adjoint();
      if ((next - x).norm() < 1e-12) break;
      x = next;
    }
  }
  // the inf->inf norm is dominated by its completely bounded version, which
  // equals the diamond norm of the preadjoint
  res.upper = diamond_norm_superop(superop.adjoint()).upper;
  return res;
}

IntervalResult wasserstein_norm(const ComplexMatrix& rho, const LipschitzStructure& l,
                                const SolveOptions& opts) {
  if (rho.rows() != l.dim() || rho.cols() != l.dim())
    throw InputError("wasserstein_norm: dimension mismatch");
  IntervalResult res;
  if (l.mean_zero_dim() == 0) return res;

  const int d = l.dim();
  ComplexMatrix rho_perp = mean_zero_project(rho, l);
  double gap_factor =
      l.lambda_gap > 1e-12 ? std::sqrt(double(l.active_count) / (d * l.lambda_gap)) : kInf;
  res.upper = rho_perp.norm() * gap_factor;
  if (rho_perp.norm() < 1e-14) {
    res.upper = 0.0;
    return res;
  }

  FeasibleSet fs(l, opts);
  ComplexMatrix g = rho.adjoint() / d;  // constant gradient of Re tr(rho x)/d
  ComplexMatrix x = fs.project((4.0 * d / g.norm()) * g);
  for (int it = 0; it < opts.ascent_iters; ++it) {
    ComplexMatrix w = fs.certify(x);
    double val = std::abs((rho * w).trace()) / d;
    res.lower = std::max(res.lower, val);
    double eta = opts.step0 * d / std::sqrt(1.0 + it);
    x = fs.project(x + (eta / g.norm()) * g);
  }
  res.upper = std::max(res.upper, res.lower);
  return res;
}

IndexResult subalgebra_index(const LipschitzStructure& l, const SolveOptions& opts) {
  const int d = l.dim();
  const int cdim = static_cast<int>(l.commutant_basis.size());

  auto value_of = [&](const ComplexVector& psi) {
    ComplexMatrix rho = psi * psi.adjoint();
    ComplexMatrix er = unvec(ComplexVector(l.efix_superop * vec(rho)), d, d);
    er = 0.5 * (er + er.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(er);
    ComplexVector isqrt = ComplexVector::Zero(d);
    double top = es.eigenvalues().maxCoeff();
    for (int k = 0; k < d; ++k)
      if (es.eigenvalues()(k) > 1e-12 * std::max(1.0, top))
        isqrt(k) = Complex(1.0 / std::sqrt(es.eigenvalues()(k)), 0);
    ComplexMatrix w = es.eigenvectors() * isqrt.asDiagonal() * es.eigenvectors().adjoint();
    ComplexMatrix b = w * rho * w;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(0.5 * (b + b.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    return eb.eigenvalues().maxCoeff();
  };

  IndexResult res;
  res.witness_state = ComplexVector::Zero(d);

  // deterministic net: basis states, two-level superpositions, uniform vector
  std::vector<ComplexVector> net;
  for (int i = 0; i < d; ++i) {
    ComplexVector e = ComplexVector::Zero(d);
    e(i) = 1.0;
    net.push_back(e);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (Complex c : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        ComplexVector e = ComplexVector::Zero(d);
        e(i) = Complex(1, 0) / std::sqrt(2.0);
        e(j) = c / std::sqrt(2.0);
        net.push_back(e);
      }
  net.push_back(ComplexVector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0)));

  for (const auto& psi : net) {
    double v = value_of(psi);
    if (v > res.lower) {
      res.lower = v;
      res.witness_state = psi;
    }
  }

  // seeded hill climbing from the best net state and random restarts
  Rng rng(opts.seed);
  std::vector<ComplexVector> climbs = {res.witness_state};
  for (int r = 0; r < opts.restarts; ++r) climbs.push_back(random_state(d, rng));
  for (auto psi : climbs) {
    double v = value_of(psi);
    double sigma = 0.3;
    for (int it = 0; it < 200 && sigma > 1e-9; ++it) {
      ComplexVector trial = psi + sigma * random_state(d, rng);
      trial /= trial.norm();
      double vt = value_of(trial);
      if (vt > v) {
        v = vt;
        psi = trial;
      } else {
        sigma *= 0.93;
      }
    }
    if (v > res.lower) {
      res.lower = v;
      res.witness_state = psi;
    }
  }

  // analytic cases
  bool abelian = true;
  for (int i = 0; i < cdim && abelian; ++i)
    for (int j = i + 1; j < cdim; ++j) {
      const auto& a = l.commutant_basis[i];
      const auto& b = l.commutant_basis[j];
      if ((a * b - b * a).norm() > 1e-9) {
        abelian = false;
        break;
      }
    }
  if (cdim == 1) {
    res.upper = d;  // fixed algebra is the scalars
    res.upper_certified = true;
  } else if (cdim == d * d) {
    res.upper = 1.0;  // conditional expectation is the identity
    res.upper_certified = true;
  } else if (cdim == d && abelian) {
    res.upper = d;  // maximal abelian fixed algebra
    res.upper_certified = true;
  } else {
    res.upper = res.lower;
  }
  if (res.upper < res.lower) res.upper = res.lower;
  return res;
}

EntropyTransportReport entropy_transport_check(const ComplexMatrix& rho,
                                               const LipschitzStructure& l, double lambda,
                                               const SolveOptions& opts) {
  if (l.resource.kind != ResourceSet::Kind::Continuous)
    throw InputError("entropy_transport_check: needs self-adjoint generators");
  if (lambda <= 0) throw InputError("entropy_transport_check: lambda must be positive");
  const int d = l.dim();
  if (rho.rows() != d || rho.cols() != d)
    throw InputError("entropy_transport_check: dimension mismatch");
  if ((rho - rho.adjoint()).norm() > 1e-9 || std::abs(rho.trace().real() - 1.0) > 1e-9)
    throw InputError("entropy_transport_check: input is not a state");

  auto relative_entropy = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(0.5 * (a + a.adjoint()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(0.5 * (b + b.adjoint()));
    // support check: supp(a) must sit inside supp(b)
    ComplexMatrix pb_comp = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
      if (eb.eigenvalues()(k) <= 1e-12)
        pb_comp += eb.eigenvectors().col(k) * eb.eigenvectors().col(k).adjoint();
    if ((pb_comp * a * pb_comp).norm() > 1e-10)
      throw InputError("relative entropy: support condition violated");
    double out = 0.0;
    ComplexMatrix logb = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
      if (eb.eigenvalues()(k) > 1e-12)
        logb += std::log(eb.eigenvalues()(k)) * eb.eigenvectors().col(k) *
                eb.eigenvectors().col(k).adjoint();
    for (int k = 0; k < d; ++k) {
      double p = ea.eigenvalues()(k);
      if (p > 1e-14) out += p * std::log(p);
    }
    out -= (a * logb).trace().real();
    return std::max(0.0, out);
  };

  EntropyTransportReport rep;
  ComplexMatrix er = unvec(ComplexVector(l.efix_superop * vec(rho)), d, d);
  er = 0.5 * (er + er.adjoint());
  rep.relative_entropy = relative_entropy(rho, er);

  IntervalResult w = wasserstein_norm(rho, l, opts);
  rep.wasserstein_lower = w.lower;
  rep.wasserstein_upper = w.upper;
  rep.transport_rhs = 4.0 * std::sqrt(2.0 * rep.relative_entropy / lambda);
  rep.holds = rep.wasserstein_upper <= rep.transport_rhs + 1e-9;

  // heuristic decay-rate probe: forward difference of the entropy decay
  // along the gradient-form semigroup, sampled over random states
  ComplexMatrix gen = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& a : l.resource.elements) {
    ComplexMatrix a2 = a * a;
    gen += kron(a.conjugate(), a) -
           0.5 * (kron(identity(d), a2) + kron(a2.conjugate(), identity(d)));
  }
  const double h = 0.01;
  ComplexMatrix step = matrix_exp(h * gen);
  Rng rng(opts.seed);
  double lam_hat = kInf;
  std::vector<ComplexMatrix> samples = {rho};
  for (int i = 0; i < 16; ++i) {
    ComplexMatrix g = ginibre(d, d, rng);
    ComplexMatrix sigma = g * g.adjoint();
    samples.push_back(sigma / sigma.trace().real());
  }
  for (const auto& sigma : samples) {
    ComplexMatrix es = unvec(ComplexVector(l.efix_superop * vec(sigma)), d, d);
    es = 0.5 * (es + es.adjoint());
    double d0 = relative_entropy(sigma, es);
    if (d0 < 1e-8) continue;
    ComplexMatrix st = unvec(ComplexVector(step * vec(sigma)), d, d);
    st = 0.5 * (st + st.adjoint());
    double dh = relative_entropy(st, es);
    lam_hat = std::min(lam_hat, -(dh - d0) / (h * d0));
  }
  rep.empirical_lambda = lam_hat == kInf ? 0.0 : lam_hat;
  return rep;
}

}  // namespace chancomp
