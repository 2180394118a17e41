// Copyright 2026 The qcm Authors
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
//
// A classical bit modeled as an ensemble of N particles: the uniform mixture
// rho = (1/N) sum |psi_n><psi_n|, corruption of a few members into
// alpha|psi> + beta|psi_perp>, environmental dephasing of the corrupted
// members, and the resulting shift in observable expectations, which is
// bounded by (2 eps / N) * ||Omega||.

#ifndef QCM_ENSEMBLE_HPP_
#define QCM_ENSEMBLE_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qcm {

/// Unit-norm state vector over a small d-dimensional basis (d = 2 by
/// default). Construction enforces |norm - 1| <= 1e-12.
class PureState {
 public:
  explicit PureState(Eigen::VectorXcd amplitudes);

  /// Computational basis state |index> in dimension dim.
  static PureState basis(std::int64_t dim, std::int64_t index);
  /// Rescales an arbitrary nonzero vector to unit norm.
  static PureState normalized(const Eigen::VectorXcd& v);

  std::int64_t dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// The orthogonal complement of a qubit state, (-b*, a*) for (a, b).
/// Unique up to phase; defined for dim 2 only.
PureState qubit_orthogonal(const PureState& psi);

/// One corrupted member: members[index] acquires an orthogonal component of
/// amplitude beta (|alpha|^2 = 1 - |beta|^2 implied). For members of
/// dimension > 2 an explicit unit vector orthogonal to the member must be
/// supplied; for qubits it is derived.
struct Corruption {
  std::int64_t index = 0;
  std::complex<double> beta;
  std::optional<Eigen::VectorXcd> orthogonal;
};

/// N member states plus the corruption list describing rho and rho'.
/// Corruption indices must be distinct and in range; |beta| <= 1.
struct EnsembleSpec {
  std::vector<PureState> members;
  std::vector<Corruption> corruptions;
};

/// Hermitian observable; construction enforces hermiticity within 1e-12.
class Observable {
 public:
  explicit Observable(Eigen::MatrixXcd matrix);

  static Observable sigma_x();
  static Observable sigma_y();
  static Observable sigma_z();

  std::int64_t dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
};

/// Largest absolute eigenvalue of the observable.
double operator_norm(const Observable& omega);

/// rho = (1/N) sum |psi_n><psi_n|. Members must be nonempty and of equal
/// dimension.
Eigen::MatrixXcd density(std::span<const PureState> members);

/// <Omega> = Tr(rho Omega); the imaginary residue is below 1e-12 for
/// Hermitian inputs and is discarded.
double expectation(const Eigen::MatrixXcd& rho, const Observable& omega);

/// Density matrix with corrupted members replaced coherently by
/// alpha|psi> + beta|psi_perp| (cross terms kept). Exposed for tests; the
/// model proper applies dephasing first.
Eigen::MatrixXcd corrupt_coherent(const EnsembleSpec& spec);

/// Density matrix after the corrupted members have dephased:
/// rho' = rho + (1/N) sum_i |beta_i|^2 (|perp_i><perp_i| - |psi_i><psi_i|).
Eigen::MatrixXcd corrupt_dephased(const EnsembleSpec& spec);

struct ExpectationShift {
  double delta = 0.0;  // |<Omega> - <Omega'>|
  double bound = 0.0;  // (2 eps / N) * ||Omega||
};

/// The dephased expectation shift and its ensemble bound; delta <= bound
/// always, with equality for full flips of an eigenbasis observable.
ExpectationShift expectation_shift(const EnsembleSpec& spec,
                                   const Observable& omega);

}  // namespace qcm

#endif  // QCM_ENSEMBLE_HPP_
