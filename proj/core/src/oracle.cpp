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

#include "qcm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcm {
namespace {

void check_qubit_state(const PureState& psi) {
  if (psi.dim() != 2) {
    throw std::domain_error("symmetric expansion requires qubit states");
  }
}

std::int64_t qubit_count(const FullDensity& rho) {
  const std::int64_t dim = rho.rows();
  if (dim == 0 || rho.cols() != dim || (dim & (dim - 1)) != 0) {
    throw std::domain_error("density matrix dimension must be a power of 2");
  }
  std::int64_t m = 0;
  while ((std::int64_t{1} << m) < dim) ++m;
  return m;
}

}  // namespace

FullVector expand_sym(std::int64_t m, std::int64_t j, const PureState& psi) {
  check_qubit_state(psi);
  if (m < 1) {
    throw std::domain_error("symmetric expansion requires m >= 1");
  }
  if (m > kMaxExpandQubits) {
    throw std::length_error("symmetric expansion capped at 14 qubits");
  }
  if (j < 0 || j > m) {
    throw std::domain_error("flip count must lie in [0, m]");
  }

  const Eigen::Vector2cd chi0 = psi.amplitudes();
  const Eigen::Vector2cd chi1 = qubit_orthogonal(psi).amplitudes();

  // levels[jp] is the m'-qubit symmetric state with jp flips; the new qubit
  // enters at bit position m'-1 with weight sqrt of the placement fraction.
  std::vector<FullVector> levels(static_cast<std::size_t>(j) + 1);
  levels[0] = chi0;
  if (j > 0) levels[1] = chi1;
  for (std::int64_t t = 2; t <= m; ++t) {
    const std::int64_t dim = std::int64_t{1} << t;
    std::vector<FullVector> next(static_cast<std::size_t>(j) + 1);
    for (std::int64_t jp = std::max<std::int64_t>(0, j - (m - t));
         jp <= std::min(j, t); ++jp) {
      FullVector v = FullVector::Zero(dim);
      if (jp <= t - 1 && levels[jp].size() > 0) {
        const double w = std::sqrt(static_cast<double>(t - jp) /
                                   static_cast<double>(t));
        v.head(dim / 2) += w * chi0(0) * levels[jp];
        v.tail(dim / 2) += w * chi0(1) * levels[jp];
      }
      if (jp >= 1 && levels[jp - 1].size() > 0) {
        const double w =
            std::sqrt(static_cast<double>(jp) / static_cast<double>(t));
        v.head(dim / 2) += w * chi1(0) * levels[jp - 1];
        v.tail(dim / 2) += w * chi1(1) * levels[jp - 1];
      }
      next[jp] = std::move(v);
    }
    levels = std::move(next);
  }
  return levels[static_cast<std::size_t>(j)];
}

FullDensity clone_output_density(const CloneParams& params,
                                 const PureState& psi) {
  check_qubit_state(psi);
  const std::int64_t m = params.outputs;
  const std::int64_t n = params.inputs;
  if (m > kMaxDensityQubits) {
    throw std::length_error("full output density capped at 12 qubits");
  }
  const std::int64_t dim = std::int64_t{1} << m;
  FullDensity rho = FullDensity::Zero(dim, dim);
  // alpha_j^2 by direct factorial-ratio recurrence, independent of cloner.
  double weight = (static_cast<double>(n) + 1.0) / (static_cast<double>(m) + 1.0);
  for (std::int64_t j = 0; j <= m - n; ++j) {
    const FullVector v = expand_sym(m, j, psi);
    rho.noalias() += weight * (v * v.adjoint());
    weight *= static_cast<double>(m - n - j) / static_cast<double>(m - j);
  }
  return rho;
}

FullDensity partial_trace(const FullDensity& rho,
                          std::span<const std::int64_t> keep) {
  const std::int64_t m = qubit_count(rho);
  std::vector<std::int64_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || kept.size() > static_cast<std::size_t>(m)) {
    throw std::domain_error("must keep between 1 and m qubits");
  }
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 0 || kept.back() >= m) {
    throw std::domain_error("kept qubit positions must be distinct and in range");
  }

  const std::int64_t n = static_cast<std::int64_t>(kept.size());
  std::vector<std::int64_t> env;
  for (std::int64_t q = 0; q < m; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) env.push_back(q);
  }

  const auto spread = [](std::int64_t bits,
                         const std::vector<std::int64_t>& positions) {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if ((bits >> i) & 1) out |= std::int64_t{1} << positions[i];
    }
    return out;
  };

  const std::int64_t out_dim = std::int64_t{1} << n;
  const std::int64_t env_dim = std::int64_t{1} << (m - n);
  std::vector<std::int64_t> kept_index(static_cast<std::size_t>(out_dim));
  for (std::int64_t a = 0; a < out_dim; ++a) kept_index[a] = spread(a, kept);
  std::vector<std::int64_t> env_index(static_cast<std::size_t>(env_dim));
  for (std::int64_t e = 0; e < env_dim; ++e) env_index[e] = spread(e, env);

  FullDensity out = FullDensity::Zero(out_dim, out_dim);
  for (std::int64_t a = 0; a < out_dim; ++a) {
    for (std::int64_t b = 0; b < out_dim; ++b) {
      std::complex<double> acc = 0.0;
      for (std::int64_t e = 0; e < env_dim; ++e) {
        acc += rho(kept_index[a] | env_index[e], kept_index[b] | env_index[e]);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

FullDensity partial_trace_first(const FullDensity& rho,
                                std::int64_t keep_count) {
  std::vector<std::int64_t> keep(static_cast<std::size_t>(
      std::max<std::int64_t>(keep_count, 0)));
  for (std::int64_t q = 0; q < keep_count; ++q) {
    keep[static_cast<std::size_t>(q)] = q;
  }
  return partial_trace(rho, keep);
}

double CertifyReport::max_deviation() const {
  return std::max({max_diag_deviation, max_offdiag, trace_error,
                   subset_deviation});
}

CertifyReport certify(const CloneParams& params, std::int64_t block) {
  return certify(params, block, PureState::basis(2, 0));
}

CertifyReport certify(const CloneParams& params, std::int64_t block,
                      const PureState& psi) {
  if (block < 1 || block > params.outputs) {
    throw std::domain_error("reduced block size must lie in [1, M]");
  }
  const std::int64_t m = params.outputs;

  const FullDensity full = clone_output_density(params, psi);
  const FullDensity rho_n = partial_trace_first(full, block);

  // Permutation symmetry: tracing out any other subset must agree.
  std::vector<std::int64_t> high_keep;
  for (std::int64_t q = m - block; q < m; ++q) high_keep.push_back(q);
  const FullDensity rho_alt = partial_trace(full, high_keep);

  CertifyReport report{params, block, {}, {}, 0.0, 0.0, 0.0, 0.0};
  report.subset_deviation = (rho_n - rho_alt).cwiseAbs().maxCoeff();
  report.trace_error = std::abs(rho_n.trace().real() - 1.0) +
                       std::abs(rho_n.trace().imag());

  const ExactSymDiagonal closed = reduced_diagonal_exact(params, block);
  std::vector<FullVector> basis;
  basis.reserve(static_cast<std::size_t>(block) + 1);
  for (std::int64_t k = 0; k <= block; ++k) {
    basis.push_back(expand_sym(block, k, psi));
  }
  for (std::int64_t k = 0; k <= block; ++k) {
    const std::complex<double> diag =
        basis[static_cast<std::size_t>(k)].dot(rho_n * basis[static_cast<std::size_t>(k)]);
    report.oracle_coeffs.push_back(diag.real());
    report.closed_coeffs.push_back(
        to_double(closed.coeffs[static_cast<std::size_t>(k)]));
    report.max_diag_deviation = std::max(
        report.max_diag_deviation,
        std::abs(diag.real() - report.closed_coeffs.back()) +
            std::abs(diag.imag()));
    for (std::int64_t l = k + 1; l <= block; ++l) {
      const std::complex<double> off =
          basis[static_cast<std::size_t>(k)].dot(rho_n * basis[static_cast<std::size_t>(l)]);
      report.max_offdiag = std::max(report.max_offdiag, std::abs(off));
    }
  }
  return report;
}

}  // namespace qcm
