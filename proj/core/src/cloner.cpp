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

#include "qcm/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcm {
namespace {

void check_block(const CloneParams& p, std::int64_t block) {
  if (block < 1 || block > p.outputs) {
    throw std::domain_error("reduced block size must lie in [1, M]");
  }
}

void check_flip_index(const CloneParams& p, std::int64_t j) {
  if (j < 0 || j > p.outputs - p.inputs) {
    throw std::domain_error("spectrum index must lie in [0, M-N]");
  }
}

// Upper summation limit of the k-th diagonal coefficient: j may not exceed
// M-n+k (no more flips than non-block qubits plus the block's own k), nor
// M-N (the spectrum's support).
std::int64_t row_upper_limit(const CloneParams& p, std::int64_t block,
                             std::int64_t k) {
  return std::min(p.outputs - block + k, p.outputs - p.inputs);
}

// Sum over j of alpha_j^2 C(M-n, j-k) C(n, k) / C(M, j) as exact rationals,
// advancing consecutive terms by their integer ratio.
Rational row_sum_exact(const CloneParams& p,
                       const std::vector<Rational>& alpha_sq,
                       std::int64_t block, std::int64_t k) {
  const std::int64_t m = p.outputs;
  const std::int64_t n_in = p.inputs;
  const std::int64_t jmax = row_upper_limit(p, block, k);
  if (k > jmax) return Rational(0);

  Rational term = alpha_sq[static_cast<std::size_t>(k)] *
                  Rational(binomial(block, k), binomial(m, k));
  Rational sum = term;
  for (std::int64_t j = k + 1; j <= jmax; ++j) {
    const BigInt num = BigInt(m - n_in - j + 1) * BigInt(m - block + k - j + 1) *
                       BigInt(j);
    const BigInt den = BigInt(m - j + 1) * BigInt(m - j + 1) * BigInt(j - k);
    term *= Rational(num, den);
    sum += term;
  }
  return sum;
}

// Log-domain version of the same row: first term from the ln(k!) cache, then
// a log-space ratio recurrence, with a compensated accumulator over exp'd
// terms (all nonnegative, all <= 1).
double row_sum_log(const CloneParams& p, std::int64_t block, std::int64_t k) {
  const std::int64_t m = p.outputs;
  const std::int64_t n_in = p.inputs;
  const std::int64_t jmax = row_upper_limit(p, block, k);
  if (k > jmax) return 0.0;

  const auto lg = [](std::int64_t v) {
    return std::log(static_cast<double>(v));
  };
  const double log_alpha_k =
      std::log((static_cast<double>(n_in) + 1.0) /
               (static_cast<double>(m) + 1.0)) +
      log_factorial_value(m - n_in) + log_factorial_value(m - k) -
      log_factorial_value(m - n_in - k) - log_factorial_value(m);
  double log_term =
      log_alpha_k + log_binomial_value(block, k) - log_binomial_value(m, k);

  NeumaierSum sum;
  sum.add(std::exp(log_term));
  for (std::int64_t j = k + 1; j <= jmax; ++j) {
    log_term += lg(m - n_in - j + 1) + lg(m - block + k - j + 1) + lg(j) -
                2.0 * lg(m - j + 1) - lg(j - k);
    sum.add(std::exp(log_term));
  }
  return sum.value();
}

}  // namespace

CloneParams::CloneParams(std::int64_t n_inputs, std::int64_t m_outputs)
    : inputs(n_inputs), outputs(m_outputs) {
  if (inputs < 1 || outputs < inputs) {
    throw std::domain_error("CloneParams requires 1 <= N <= M");
  }
}

// --- exact backend ---------------------------------------------------------

Rational alpha_sq_exact(const CloneParams& params, std::int64_t j) {
  check_flip_index(params, j);
  const std::int64_t m = params.outputs;
  const std::int64_t n = params.inputs;
  Rational w(n + 1, m + 1);
  for (std::int64_t t = 0; t < j; ++t) {
    w *= Rational(m - n - t, m - t);
  }
  return w;
}

ExactCloneSpectrum spectrum_exact(const CloneParams& params) {
  const std::int64_t m = params.outputs;
  const std::int64_t n = params.inputs;
  ExactCloneSpectrum s{params, {}};
  s.weights.reserve(static_cast<std::size_t>(m - n) + 1);
  Rational w(n + 1, m + 1);
  s.weights.push_back(w);
  for (std::int64_t j = 1; j <= m - n; ++j) {
    w *= Rational(m - n - j + 1, m - j + 1);
    s.weights.push_back(w);
  }
  return s;
}

ExactSymDiagonal reduced_diagonal_exact(const CloneParams& params,
                                        std::int64_t block) {
  check_block(params, block);
  const std::vector<Rational> alpha = spectrum_exact(params).weights;
  ExactSymDiagonal d{block, {}};
  d.coeffs.reserve(static_cast<std::size_t>(block) + 1);
  for (std::int64_t k = 0; k <= block; ++k) {
    d.coeffs.push_back(row_sum_exact(params, alpha, block, k));
  }
  return d;
}

Rational fidelity_exact(const CloneParams& params) {
  const std::vector<Rational> alpha = spectrum_exact(params).weights;
  return row_sum_exact(params, alpha, params.inputs, 0);
}

ExactSymDiagonal error_distribution_exact(const CloneParams& params) {
  return reduced_diagonal_exact(params, params.inputs);
}

Rational info_fidelity_exact(const CloneParams& params,
                             std::int64_t max_errors) {
  if (max_errors < 0 || max_errors > params.inputs) {
    throw std::domain_error("tolerated error count must lie in [0, N]");
  }
  const std::vector<Rational> alpha = spectrum_exact(params).weights;
  Rational sum(0);
  for (std::int64_t k = 0; k <= max_errors; ++k) {
    sum += row_sum_exact(params, alpha, params.inputs, k);
  }
  return sum;
}

// --- log-domain backend ----------------------------------------------------

double alpha_sq(const CloneParams& params, std::int64_t j) {
  check_flip_index(params, j);
  const std::int64_t m = params.outputs;
  const std::int64_t n = params.inputs;
  const double lg =
      std::log((static_cast<double>(n) + 1.0) / (static_cast<double>(m) + 1.0)) +
      log_factorial_value(m - n) + log_factorial_value(m - j) -
      log_factorial_value(m - n - j) - log_factorial_value(m);
  return std::exp(lg);
}

CloneSpectrum spectrum(const CloneParams& params) {
  const std::int64_t m = params.outputs;
  const std::int64_t n = params.inputs;
  CloneSpectrum s{params, {}};
  s.weights.reserve(static_cast<std::size_t>(m - n) + 1);
  for (std::int64_t j = 0; j <= m - n; ++j) {
    s.weights.push_back(alpha_sq(params, j));
  }
  return s;
}

SymDiagonal reduced_diagonal(const CloneParams& params, std::int64_t block) {
  check_block(params, block);
  SymDiagonal d{block, {}};
  d.coeffs.reserve(static_cast<std::size_t>(block) + 1);
  for (std::int64_t k = 0; k <= block; ++k) {
    d.coeffs.push_back(row_sum_log(params, block, k));
  }
  return d;
}

double fidelity(const CloneParams& params) {
  return row_sum_log(params, params.inputs, 0);
}

SymDiagonal error_distribution(const CloneParams& params) {
  return reduced_diagonal(params, params.inputs);
}

double info_fidelity(const CloneParams& params, std::int64_t max_errors) {
  if (max_errors < 0 || max_errors > params.inputs) {
    throw std::domain_error("tolerated error count must lie in [0, N]");
  }
  NeumaierSum sum;
  for (std::int64_t k = 0; k <= max_errors; ++k) {
    sum.add(row_sum_log(params, params.inputs, k));
  }
  return sum.value();
}

std::vector<double> error_weights(const CloneParams& params,
                                  std::int64_t max_errors) {
  if (max_errors < 0 || max_errors > params.inputs) {
    throw std::domain_error("tolerated error count must lie in [0, N]");
  }
  std::vector<double> rows;
  rows.reserve(static_cast<std::size_t>(max_errors) + 1);
  for (std::int64_t k = 0; k <= max_errors; ++k) {
    rows.push_back(row_sum_log(params, params.inputs, k));
  }
  return rows;
}

}  // namespace qcm
