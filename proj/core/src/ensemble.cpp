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

#include "qcm/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace qcm {
namespace {

constexpr double kNormTol = 1e-12;

// Resolves the orthogonal direction of a corrupted member: derived for
// qubits, supplied (and checked) for higher dimensions.
Eigen::VectorXcd orthogonal_direction(const PureState& member,
                                      const Corruption& c) {
  if (c.orthogonal.has_value()) {
    const Eigen::VectorXcd& perp = *c.orthogonal;
    if (perp.size() != member.dim()) {
      throw std::domain_error("orthogonal vector dimension mismatch");
    }
    if (std::abs(perp.norm() - 1.0) > kNormTol) {
      throw std::domain_error("orthogonal vector must have unit norm");
    }
    if (std::abs(member.amplitudes().dot(perp)) > kNormTol) {
      throw std::domain_error(
          "supplied vector is not orthogonal to the corrupted member");
    }
    return perp;
  }
  if (member.dim() != 2) {
    throw std::domain_error(
        "corruption of a member with dim > 2 requires an explicit "
        "orthogonal vector");
  }
  return qubit_orthogonal(member).amplitudes();
}

void validate_spec(const EnsembleSpec& spec) {
  if (spec.members.empty()) {
    throw std::domain_error("ensemble must have at least one member");
  }
  const std::int64_t d = spec.members.front().dim();
  for (const PureState& m : spec.members) {
    if (m.dim() != d) {
      throw std::domain_error("ensemble members must share one dimension");
    }
  }
  const std::int64_t n = static_cast<std::int64_t>(spec.members.size());
  std::unordered_set<std::int64_t> seen;
  for (const Corruption& c : spec.corruptions) {
    if (c.index < 0 || c.index >= n) {
      throw std::domain_error("corruption index out of range");
    }
    if (!seen.insert(c.index).second) {
      throw std::domain_error("corruption indices must be distinct");
    }
    if (std::abs(c.beta) > 1.0 + kNormTol) {
      throw std::domain_error("corruption amplitude |beta| must be <= 1");
    }
  }
}

}  // namespace

PureState::PureState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw std::domain_error("pure state must have positive dimension");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
    throw std::domain_error("pure state must have unit norm");
  }
}

PureState PureState::basis(std::int64_t dim, std::int64_t index) {
  if (index < 0 || index >= dim) {
    throw std::domain_error("basis index out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

PureState PureState::normalized(const Eigen::VectorXcd& v) {
  const double norm = v.norm();
  if (norm == 0.0) {
    throw std::domain_error("cannot normalize the zero vector");
  }
  return PureState(v / norm);
}

PureState qubit_orthogonal(const PureState& psi) {
  if (psi.dim() != 2) {
    throw std::domain_error("qubit_orthogonal requires dim 2");
  }
  Eigen::VectorXcd perp(2);
  perp(0) = -std::conj(psi.amplitudes()(1));
  perp(1) = std::conj(psi.amplitudes()(0));
  return PureState(std::move(perp));
}

Observable::Observable(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw std::domain_error("observable must be a nonempty square matrix");
  }
  const double residue =
      (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (residue > kNormTol) {
    throw std::domain_error("observable must be Hermitian");
  }
}

Observable Observable::sigma_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return Observable(std::move(m));
}

Observable Observable::sigma_y() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  return Observable(std::move(m));
}

Observable Observable::sigma_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return Observable(std::move(m));
}

double operator_norm(const Observable& omega) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(omega.matrix(),
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd density(std::span<const PureState> members) {
  if (members.empty()) {
    throw std::domain_error("ensemble must have at least one member");
  }
  const std::int64_t d = members.front().dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const PureState& m : members) {
    if (m.dim() != d) {
      throw std::domain_error("ensemble members must share one dimension");
    }
    rho += m.amplitudes() * m.amplitudes().adjoint();
  }
  return rho / static_cast<double>(members.size());
}

double expectation(const Eigen::MatrixXcd& rho, const Observable& omega) {
  if (rho.rows() != omega.dim()) {
    throw std::domain_error("state and observable dimensions differ");
  }
  return (rho * omega.matrix()).trace().real();
}

Eigen::MatrixXcd corrupt_coherent(const EnsembleSpec& spec) {
  validate_spec(spec);
  const double n = static_cast<double>(spec.members.size());
  Eigen::MatrixXcd rho = density(spec.members);
  for (const Corruption& c : spec.corruptions) {
    const PureState& member = spec.members[static_cast<std::size_t>(c.index)];
    const Eigen::VectorXcd& psi = member.amplitudes();
    const Eigen::VectorXcd perp = orthogonal_direction(member, c);
    const double beta_sq = std::norm(c.beta);
    const std::complex<double> alpha = std::sqrt(1.0 - beta_sq);
    const Eigen::VectorXcd corrupted = alpha * psi + c.beta * perp;
    rho += (corrupted * corrupted.adjoint() - psi * psi.adjoint()) / n;
  }
  return rho;
}

Eigen::MatrixXcd corrupt_dephased(const EnsembleSpec& spec) {
  validate_spec(spec);
  const double n = static_cast<double>(spec.members.size());
  Eigen::MatrixXcd rho = density(spec.members);
  for (const Corruption& c : spec.corruptions) {
    const PureState& member = spec.members[static_cast<std::size_t>(c.index)];
    const Eigen::VectorXcd& psi = member.amplitudes();
    const Eigen::VectorXcd perp = orthogonal_direction(member, c);
    const double beta_sq = std::norm(c.beta);
    rho += beta_sq / n *
           (perp * perp.adjoint() - psi * psi.adjoint());
  }
  return rho;
}

ExpectationShift expectation_shift(const EnsembleSpec& spec,
                                   const Observable& omega) {
  const Eigen::MatrixXcd rho = density(spec.members);
  const Eigen::MatrixXcd rho_prime = corrupt_dephased(spec);
  const double eps = static_cast<double>(spec.corruptions.size());
  const double n = static_cast<double>(spec.members.size());
  ExpectationShift shift;
  shift.delta = std::abs(expectation(rho, omega) - expectation(rho_prime, omega));
  shift.bound = 2.0 * eps / n * operator_norm(omega);
  return shift;
}

}  // namespace qcm
