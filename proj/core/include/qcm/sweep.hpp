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
// Sweep runner: tabulates fidelity and information fidelity across parameter
// grids and emits CSV (the primary artifact) or a minimal SVG line plot.
// Sweeps always run on the log-domain backend, rows are evaluated
// concurrently per parameter group and merged in deterministic order, and
// output for fixed parameters is byte-identical across runs.

#ifndef QCM_SWEEP_HPP_
#define QCM_SWEEP_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcm {

/// Rectangular result table: ordered column names, rows of integer/real
/// cells conforming to them, and the generation parameters as metadata.
struct SweepTable {
  using Cell = std::variant<std::int64_t, double>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Fidelity of the N-block over a grid of N and copy multipliers:
/// columns [N, kappa, F], rows lexicographic in (N, kappa).
/// Requires every kappa >= 2 and 1 <= n_min <= n_max.
SweepTable sweep_fig2(std::span<const std::int64_t> kappas, std::int64_t n_min,
                      std::int64_t n_max);

/// Information fidelity at fixed N over tolerated-error counts:
/// columns [kappa, Err, infoF], rows lexicographic in (kappa, Err).
/// Requires every kappa >= 2 and 0 <= err_min <= err_max <= N.
SweepTable sweep_fig3(std::int64_t n_inputs,
                      std::span<const std::int64_t> kappas,
                      std::int64_t err_min, std::int64_t err_max);

/// Fidelity along a geometric N grid with a pairwise Richardson estimate of
/// the N -> infinity limit (model F = L + c/N): columns
/// [N, F, extrapolated_limit]. The first row repeats its own F; row i
/// reports (N_i F_i - N_{i-1} F_{i-1}) / (N_i - N_{i-1}). Requires
/// kappa >= 2 and a strictly increasing grid.
SweepTable limit_study(std::int64_t kappa,
                       std::span<const std::int64_t> n_grid);

/// Formats with 12 significant digits (the numeric text contract).
std::string format_number(double v);
std::string format_cell(const SweepTable::Cell& cell);

/// CSV: UTF-8, '#'-prefixed metadata lines, header row, ',' separator,
/// floats with 12 significant digits, '\n' line ends.
void write_csv(const SweepTable& table, std::ostream& os);
void write_csv_file(const SweepTable& table, const std::filesystem::path& path);

/// Column binding for the SVG rendering: one polyline per distinct value of
/// series_col, x_col/y_col on linear axes.
struct SvgSpec {
  std::string x_col;
  std::string y_col;
  std::string series_col;  // empty: single polyline
};

/// Standalone SVG line plot of a sweep table. Deliberately minimal; the CSV
/// is the primary artifact.
void write_svg(const SweepTable& table, const SvgSpec& spec, std::ostream& os);
void write_svg_file(const SweepTable& table, const SvgSpec& spec,
                    const std::filesystem::path& path);

/// The SvgSpec matching a table produced by the sweep functions above,
/// keyed on the table's "table" metadata entry.
SvgSpec default_svg_spec(const SweepTable& table);

}  // namespace qcm

#endif  // QCM_SWEEP_HPP_
