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
// Brute-force certification of the cloner's closed forms: symmetric states
// are expanded into the full 2^M computational basis, the clone-side output
// mixture is assembled as a dense matrix, partial-traced down to n qubits,
// and its diagonal in the symmetric basis compared against the closed-form
// coefficients. Dense matrices only; this module exists for certification on
// small instances, not for scale.

#ifndef QCM_ORACLE_HPP_
#define QCM_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcm/cloner.hpp"
#include "qcm/ensemble.hpp"

namespace qcm {

using FullVector = Eigen::VectorXcd;
using FullDensity = Eigen::MatrixXcd;

/// Largest qubit count a symmetric state is expanded over (2^14 amplitudes).
inline constexpr std::int64_t kMaxExpandQubits = 14;
/// Largest qubit count a full output density matrix is built over.
inline constexpr std::int64_t kMaxDensityQubits = 12;

/// |(m-j) psi, j psi_perp>: the normalized equal superposition of all
/// C(m, j) placements of psi_perp among m qubits otherwise in psi. Qubit t
/// corresponds to bit t of the amplitude index. Requires 0 <= j <= m and
/// m <= kMaxExpandQubits (std::length_error beyond).
FullVector expand_sym(std::int64_t m, std::int64_t j, const PureState& psi);

/// Clone-side output density over 2^M: sum_j alpha_j^2 |sym_j><sym_j| with
/// the machine register traced out (only its orthonormality enters). The
/// alpha weights are evaluated here by direct factorial-ratio arithmetic,
/// independent of the cloner module. Requires M <= kMaxDensityQubits.
FullDensity clone_output_density(const CloneParams& params,
                                 const PureState& psi);

/// Partial trace keeping the given qubit (bit) positions, in ascending
/// output order.
FullDensity partial_trace(const FullDensity& rho,
                          std::span<const std::int64_t> keep);
/// Keeps qubits 0..keep_count-1.
FullDensity partial_trace_first(const FullDensity& rho,
                                std::int64_t keep_count);

/// Outcome of one closed-form-vs-brute-force comparison.
struct CertifyReport {
  CloneParams params;
  std::int64_t block = 0;
  std::vector<double> oracle_coeffs;  // <sym_k| rho_n |sym_k>, brute force
  std::vector<double> closed_coeffs;  // exact-backend closed form
  double max_diag_deviation = 0.0;
  double max_offdiag = 0.0;       // |<sym_k| rho_n |sym_l>|, k != l
  double trace_error = 0.0;       // |Tr(rho_n) - 1|
  double subset_deviation = 0.0;  // two different traced-out qubit subsets

  double max_deviation() const;
  bool pass(double tol = 1e-10) const { return max_deviation() <= tol; }
};

/// Runs the full comparison for one (params, block) pair. psi defaults to
/// |0>; the closed forms are basis-independent, so any unit psi must give
/// the same report up to roundoff.
CertifyReport certify(const CloneParams& params, std::int64_t block);
CertifyReport certify(const CloneParams& params, std::int64_t block,
                      const PureState& psi);

}  // namespace qcm

#endif  // QCM_ORACLE_HPP_
