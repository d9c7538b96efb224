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

#include "chancomp/matrix.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chancomp {

int SubsystemShape::total_dim() const {
  int d = 1;
  for (int f : factor_dims) d *= f;
  return d;
}

void SubsystemShape::validate(int ambient_dim) const {
  if (factor_dims.empty()) throw InputError("SubsystemShape: empty factor list");
  for (int f : factor_dims)
    if (f <= 0) throw InputError("SubsystemShape: nonpositive factor dimension");
  if (total_dim() != ambient_dim)
    throw InputError("SubsystemShape: factor product does not match ambient dimension");
}

void check_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw InputError(std::string(what) + ": non-finite entries");
}

double operator_norm(const ComplexMatrix& m) {
  check_finite(m);
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace();
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  check_finite(m);
  if (m.rows() != m.cols()) throw InputError("matrix_exp: non-square input");
  // Hermitian and anti-Hermitian inputs go through an exact eigendecomposition.
  if ((m - m.adjoint()).norm() < 1e-13 * (1.0 + m.norm())) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
    ComplexVector ev = es.eigenvalues().array().exp().matrix().cast<Complex>();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  }
  if ((m + m.adjoint()).norm() < 1e-13 * (1.0 + m.norm())) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(Complex(0, -1) * m);
    ComplexVector ev(m.rows());
    for (Eigen::Index k = 0; k < m.rows(); ++k)
      ev(k) = std::exp(Complex(0, 1) * es.eigenvalues()(k));
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  }
  return m.exp();
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            const std::vector<int>& keep) {
  check_finite(m);
  if (m.rows() != m.cols()) throw InputError("partial_trace: non-square input");
  shape.validate(static_cast<int>(m.rows()));
  const int nf = static_cast<int>(shape.factor_dims.size());
  std::vector<bool> kept(nf, false);
  for (int k : keep) {
    if (k < 0 || k >= nf) throw InputError("partial_trace: keep index out of range");
    kept[k] = true;
  }
  int dk = 1, dt = 1;
  for (int f = 0; f < nf; ++f) (kept[f] ? dk : dt) *= shape.factor_dims[f];

  // strides of each factor in the row index (row-major multi-index, factor 0 slowest)
  std::vector<int> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * shape.factor_dims[f + 1];
  std::vector<int> kept_f, traced_f;
  for (int f = 0; f < nf; ++f) (kept[f] ? kept_f : traced_f).push_back(f);

  auto index_of = [&](const std::vector<int>& factors, int combined, bool full_index) {
    // decode `combined` over the given ordered factors, return ambient offset
    int off = 0;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      int f = factors[i];
      int d = shape.factor_dims[f];
      off += (combined % d) * stride[f];
      combined /= d;
    }
    (void)full_index;
    return off;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int i = 0; i < dk; ++i) {
    int oi = index_of(kept_f, i, true);
    for (int j = 0; j < dk; ++j) {
      int oj = index_of(kept_f, j, true);
      Complex s = 0.0;
      for (int t = 0; t < dt; ++t) {
        int ot = index_of(traced_f, t, false);
        s += m(oi + ot, oj + ot);
      }
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix permute_factors(const ComplexMatrix& m, const SubsystemShape& shape,
                              const std::vector<int>& perm) {
  if (m.rows() != m.cols()) throw InputError("permute_factors: non-square input");
  shape.validate(static_cast<int>(m.rows()));
  const int nf = static_cast<int>(shape.factor_dims.size());
  if (static_cast<int>(perm.size()) != nf) throw InputError("permute_factors: bad permutation");
  std::vector<int> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * shape.factor_dims[f + 1];
  std::vector<int> new_dims(nf);
  for (int k = 0; k < nf; ++k) new_dims[k] = shape.factor_dims[perm[k]];
  const int d = shape.total_dim();

  // map new ambient index -> old ambient index
  std::vector<int> old_of(d);
  for (int idx = 0; idx < d; ++idx) {
    int rem = idx, off = 0;
    for (int k = nf - 1; k >= 0; --k) {
      int dk = new_dims[k];
      off += (rem % dk) * stride[perm[k]];
      rem /= dk;
    }
    old_of[idx] = off;
  }
  ComplexMatrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = m(old_of[i], old_of[j]);
  return out;
}

std::vector<ComplexVector> nullspace_basis(const ComplexMatrix& a, double tol) {
  check_finite(a);
  if (tol <= 0) throw InputError("nullspace_basis: tol must be positive");
  const int n = static_cast<int>(a.cols());
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<ComplexVector> basis;
  if (top == 0.0) {
    for (int k = 0; k < n; ++k) {
      ComplexVector e = ComplexVector::Zero(n);
      e(k) = 1.0;
      basis.push_back(e);
    }
    return basis;
  }
  // V columns come sorted by descending singular value; the tail spans the
  // nullspace. Emit ascending so the deepest null direction comes first.
  int rank = 0;
  int nsv = static_cast<int>(sv.size());
  for (int k = 0; k < nsv; ++k)
    if (sv(k) > tol * top) ++rank;
  for (int k = n - 1; k >= rank; --k) {
    ComplexVector v = svd.matrixV().col(k);
    fix_phase(v);
    basis.push_back(v);
  }
  return basis;
}

double default_rank_tol(const ComplexMatrix& a) {
  double top = operator_norm(a);
  return 1e-9 * static_cast<double>(std::max(a.rows(), a.cols())) * (top > 0 ? top : 1.0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw InputError("unvec: size mismatch");
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

void fix_phase(ComplexVector& v) {
  double top = v.cwiseAbs().maxCoeff();
  if (top <= 0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * top) {
      Complex phase = v(i) / std::abs(v(i));
      v /= phase;
      return;
    }
  }
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix embed_factor(const ComplexMatrix& op, const std::vector<int>& dims, int pos) {
  if (pos < 0 || pos >= static_cast<int>(dims.size()))
    throw InputError("embed_factor: position out of range");
  if (op.rows() != dims[pos]) throw InputError("embed_factor: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int f = 0; f < static_cast<int>(dims.size()); ++f)
    out = kron(out, f == pos ? op : identity(dims[f])).eval();
  return out;
}

std::uint64_t Rng::split() {
  std::uniform_int_distribution<std::uint64_t> d;
  return d(gen_);
}

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

ComplexMatrix ginibre_hermitian(int dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the diagonal phases so the distribution is Haar
  for (int k = 0; k < dim; ++k) {
    Complex d = r(k, k);
    q.col(k) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
  }
  return q;
}

ComplexVector random_state(int dim, Rng& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

}  // namespace chancomp
