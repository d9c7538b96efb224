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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "chancomp/errors.hpp"

namespace chancomp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tensor-factor layout of a square matrix: the ambient dimension is the
/// product of factor_dims, factors ordered left to right.
struct SubsystemShape {
  std::vector<int> factor_dims;

  int total_dim() const;
  void validate(int ambient_dim) const;
};

void check_finite(const ComplexMatrix& m, const char* what = "matrix");

/// Largest singular value. Works for rectangular inputs.
double operator_norm(const ComplexMatrix& m);

double hs_norm(const ComplexMatrix& m);
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);  // tr(a† b)

/// Matrix exponential (scaling-and-squaring Pade, Hermitian eigendecomposition
/// fallback for self-adjoint inputs).
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Trace over the factors not listed in `keep`. Result carries the kept
/// factors in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            const std::vector<int>& keep);

/// Reorder tensor factors of an operator: new factor k is old factor perm[k].
ComplexMatrix permute_factors(const ComplexMatrix& m, const SubsystemShape& shape,
                              const std::vector<int>& perm);

/// Orthonormal (Hilbert-Schmidt) basis of {v : ||Av|| <= tol * ||A||},
/// ordered by ascending singular value with a fixed phase convention
/// (first significant coordinate real positive).
std::vector<ComplexVector> nullspace_basis(const ComplexMatrix& a, double tol);

/// Rank tolerance policy: 1e-9 * dim * sigma_max.
double default_rank_tol(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector vec(const ComplexMatrix& m);  // column stacking
ComplexMatrix unvec(const ComplexVector& v, int rows, int cols);

/// Phase convention for eigen/singular vectors: first component with
/// magnitude above 1e-12 * max is rotated to the positive real axis.
void fix_phase(ComplexVector& v);

ComplexMatrix identity(int d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// op placed at factor `pos` of a tensor product, identity elsewhere.
ComplexMatrix embed_factor(const ComplexMatrix& op, const std::vector<int>& dims, int pos);

/// Deterministic RNG wrapper, seeded explicitly everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double normal() { return normal_(gen_); }
  double uniform() { return uniform_(gen_); }
  std::uint64_t split();  // derive a child seed

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

ComplexMatrix ginibre(int rows, int cols, Rng& rng);
ComplexMatrix ginibre_hermitian(int dim, Rng& rng);
ComplexMatrix haar_unitary(int dim, Rng& rng);
ComplexVector random_state(int dim, Rng& rng);

}  // namespace chancomp
