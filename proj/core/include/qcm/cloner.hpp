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
// Closed-form quantities of the universal symmetric N -> M qubit cloning
// machine. The clone-side output is a mixture over symmetric states with j
// qubits flipped into the orthogonal state, weighted
//
//   alpha_j^2 = (N+1)/(M+1) * (M-N)! (M-j)! / ((M-N-j)! M!),  j = 0..M-N.
//
// Tracing the output down to a block of n qubits gives a density matrix that
// is diagonal in the symmetric basis {|(n-k) psi, k psi_perp>}:
//
//   coeff[k] = sum_{j=k}^{min(M-n+k, M-N)} alpha_j^2 C(M-n, j-k) C(n, k) / C(M, j).
//
// Block fidelity is coeff[0] of the N-block; information fidelity tolerates
// up to Err erroneous qubits, i.e. sums coeff[0..Err].
//
// Every quantity is available under two backends: exact big-rational
// arithmetic (the correctness anchor) and log-domain floating arithmetic
// with compensated summation (the large-N workhorse). Formulas depend only
// on the integers N, M; the state psi never appears.

#ifndef QCM_CLONER_HPP_
#define QCM_CLONER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qcm/numerics.hpp"

namespace qcm {

/// The (N, M) pair of one cloning run: N identical inputs, M outputs.
struct CloneParams {
  CloneParams(std::int64_t n_inputs, std::int64_t m_outputs);

  /// Copy multiplier M/N, defined only when M is an integral multiple of N.
  std::optional<std::int64_t> kappa() const {
    return outputs % inputs == 0 ? std::optional<std::int64_t>(outputs / inputs)
                                 : std::nullopt;
  }

  std::int64_t inputs;   // N >= 1
  std::int64_t outputs;  // M >= N
};

/// Weights alpha_j^2 over j = 0..M-N. The machine states R_j are traced out;
/// only their orthonormality enters, which is what makes this a diagonal
/// mixture. Sums to 1 (exactly under the exact backend).
template <typename Scalar>
struct BasicCloneSpectrum {
  CloneParams params;
  std::vector<Scalar> weights;
};
using CloneSpectrum = BasicCloneSpectrum<double>;
using ExactCloneSpectrum = BasicCloneSpectrum<Rational>;

/// Diagonal of a reduced n-qubit block in the symmetric basis, indexed by the
/// number k = 0..n of orthogonal-state qubits in the block. coeffs[0] is the
/// block's fidelity against |n psi>; the trace sums to 1.
template <typename Scalar>
struct BasicSymDiagonal {
  std::int64_t block;
  std::vector<Scalar> coeffs;
};
using SymDiagonal = BasicSymDiagonal<double>;
using ExactSymDiagonal = BasicSymDiagonal<Rational>;

// --- exact backend ---------------------------------------------------------

/// alpha_j^2 as an exact rational. Requires 0 <= j <= M-N.
Rational alpha_sq_exact(const CloneParams& params, std::int64_t j);
ExactCloneSpectrum spectrum_exact(const CloneParams& params);

/// All n+1 diagonal coefficients of the reduced n-qubit block.
/// Requires 1 <= n <= M.
ExactSymDiagonal reduced_diagonal_exact(const CloneParams& params,
                                        std::int64_t block);

/// Fidelity between the N output qubits and the N inputs:
/// sum_j alpha_j^2 C(M-N, j) / C(M, j), identical to the k = 0 coefficient
/// of the N-block diagonal.
Rational fidelity_exact(const CloneParams& params);

/// The N-block diagonal read as a probability distribution over the number
/// of erroneous qubits.
ExactSymDiagonal error_distribution_exact(const CloneParams& params);

/// Probability of at most max_errors erroneous qubits in an N-block.
/// Requires 0 <= max_errors <= N. max_errors = 0 reduces to the fidelity;
/// max_errors = N gives exactly 1.
Rational info_fidelity_exact(const CloneParams& params,
                             std::int64_t max_errors);

// --- log-domain backend ----------------------------------------------------
//
// Sums walk consecutive j terms with a log-space ratio recurrence seeded from
// the ln(k!) cache and accumulate through compensated summation, so each
// quantity costs O(M) with no per-term factorial evaluation. Agrees with the
// exact backend to <= 1e-10 relative for M <= 200.

double alpha_sq(const CloneParams& params, std::int64_t j);
CloneSpectrum spectrum(const CloneParams& params);
SymDiagonal reduced_diagonal(const CloneParams& params, std::int64_t block);
double fidelity(const CloneParams& params);
SymDiagonal error_distribution(const CloneParams& params);
double info_fidelity(const CloneParams& params, std::int64_t max_errors);

/// Leading slice error_distribution(params).coeffs[0..max_errors] without
/// evaluating the remaining rows; info_fidelity is its compensated sum.
std::vector<double> error_weights(const CloneParams& params,
                                  std::int64_t max_errors);

}  // namespace qcm

#endif  // QCM_CLONER_HPP_
