// Copyright 2026 The entpoly authors
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

#include <random>
#include <vector>

#include "entpoly/errors.hpp"
#include "entpoly/types.hpp"

namespace entpoly {

/// Dense pure state of N qudits of local dimension d. Site 0 is the most
/// significant index: basis index = sum_i digit_i * d^(N-1-i).
///
/// N = 0 is legal and represents the state of the empty system, a single
/// complex scalar.
class PureState {
 public:
  PureState(int local_dim, int num_sites, Vector amplitudes);

  /// |digits[0] digits[1] ...> with unit amplitude.
  static PureState basis_state(int local_dim, const std::vector<int>& digits);

  int local_dim() const { return local_dim_; }
  int num_sites() const { return num_sites_; }
  std::int64_t dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

  double norm() const { return amplitudes_.norm(); }

  /// Unit-norm copy. Throws ValidationError on the zero vector.
  PureState normalized() const;

 private:
  int local_dim_;
  int num_sites_;
  Vector amplitudes_;
};

/// Square complex matrix acting on a declared ordered subset of sites.
/// Stored support is strictly increasing; matrix side is d^{|support|}.
/// An empty support holds a 1x1 scalar acting as that multiple of identity.
class DenseOperator {
 public:
  DenseOperator(int local_dim, std::vector<int> support, Matrix matrix);

  static DenseOperator identity(int local_dim, std::vector<int> support);

  int local_dim() const { return local_dim_; }
  const std::vector<int>& support() const { return support_; }
  const Matrix& matrix() const { return matrix_; }
  std::int64_t side() const { return matrix_.rows(); }

 private:
  int local_dim_;
  std::vector<int> support_;
  Matrix matrix_;
};

/// Hermitian matrix over N qudits with the same index convention as
/// PureState. Hermiticity is validated on construction; positivity is the
/// caller's obligation for raw matrices (see from_matrix).
class DensityMatrix {
 public:
  DensityMatrix(int local_dim, int num_sites, Matrix matrix);

  /// Normalized projector |psi><psi| / <psi|psi>.
  static DensityMatrix from_pure(const PureState& psi);

  /// Validating entry point for externally supplied matrices: checks
  /// Hermiticity and that all eigenvalues are >= -1e-10 * |lambda|_max.
  static DensityMatrix from_matrix(int local_dim, int num_sites, Matrix matrix);

  int local_dim() const { return local_dim_; }
  int num_sites() const { return num_sites_; }
  std::int64_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

 private:
  int local_dim_;
  int num_sites_;
  Matrix matrix_;
};

// --- tensor products ---

/// Tensor product; a's sites become the most significant block of the result.
PureState kron(const PureState& a, const PureState& b);

/// Tensor product of operators on disjoint supports. The result's support is
/// the sorted union, with matrix legs permuted to match.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

// --- partial trace ---

/// Trace out the sites listed in `traced`. The result lives on the remaining
/// sites in their original order; tr is preserved.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& traced);

// --- embedding and application ---

/// O_B tensor I on the complement, as a full operator on `num_sites` sites.
DenseOperator embed(const DenseOperator& op, int num_sites);

/// op applied to psi without materializing the embedded matrix.
PureState apply(const DenseOperator& op, const PureState& psi);

// --- site permutations ---

/// Moves the digit at position s to position perm[s]; perm must be a
/// bijection of [0, N).
PureState permute_sites(const PureState& psi, const std::vector<int>& perm);

// --- misc ---

/// Matrix unit E_ab = |a><b| in dimension d.
Matrix matrix_unit(int d, int a, int b);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();

/// State with i.i.d. standard complex Gaussian amplitudes (not normalized).
PureState random_state(int local_dim, int num_sites, std::mt19937_64& rng);

void validate_sites(const std::vector<int>& sites, int num_sites,
                    bool require_sorted_unique);

}  // namespace entpoly
