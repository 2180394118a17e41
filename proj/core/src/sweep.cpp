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

#include "qcm/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcm/cloner.hpp"
#include "qcm/numerics.hpp"

namespace qcm {
namespace {

std::vector<std::int64_t> checked_kappas(std::span<const std::int64_t> kappas) {
  if (kappas.empty()) {
    throw std::domain_error("at least one kappa is required");
  }
  std::vector<std::int64_t> ks(kappas.begin(), kappas.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.front() < 2) {
    throw std::domain_error("kappa must be >= 2");
  }
  return ks;
}

std::string join_int_list(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

double cell_as_double(const SweepTable::Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) {
    return static_cast<double>(std::get<std::int64_t>(cell));
  }
  return std::get<double>(cell);
}

std::size_t column_index(const SweepTable& table, const std::string& name) {
  const auto it = std::find(table.columns.begin(), table.columns.end(), name);
  if (it == table.columns.end()) {
    throw std::domain_error("no such column: " + name);
  }
  return static_cast<std::size_t>(it - table.columns.begin());
}

}  // namespace

SweepTable sweep_fig2(std::span<const std::int64_t> kappas, std::int64_t n_min,
                      std::int64_t n_max) {
  const std::vector<std::int64_t> ks = checked_kappas(kappas);
  if (n_min < 1 || n_min > n_max) {
    throw std::domain_error("require 1 <= n_min <= n_max");
  }

  // One column of F values per kappa, evaluated concurrently.
  std::vector<std::future<std::vector<double>>> jobs;
  for (const std::int64_t kappa : ks) {
    jobs.push_back(std::async(std::launch::async, [kappa, n_min, n_max] {
      std::vector<double> f;
      f.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
      for (std::int64_t n = n_min; n <= n_max; ++n) {
        f.push_back(fidelity(CloneParams(n, kappa * n)));
      }
      return f;
    }));
  }
  std::vector<std::vector<double>> per_kappa;
  per_kappa.reserve(jobs.size());
  for (auto& job : jobs) per_kappa.push_back(job.get());

  SweepTable table;
  table.columns = {"N", "kappa", "F"};
  table.metadata = {{"table", "fig2"},
                    {"backend", "log"},
                    {"kappas", join_int_list(ks)},
                    {"n_min", std::to_string(n_min)},
                    {"n_max", std::to_string(n_max)}};
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      table.rows.push_back(
          {n, ks[i], per_kappa[i][static_cast<std::size_t>(n - n_min)]});
    }
  }
  return table;
}

SweepTable sweep_fig3(std::int64_t n_inputs,
                      std::span<const std::int64_t> kappas,
                      std::int64_t err_min, std::int64_t err_max) {
  const std::vector<std::int64_t> ks = checked_kappas(kappas);
  if (err_min < 0 || err_min > err_max || err_max > n_inputs) {
    throw std::domain_error("require 0 <= err_min <= err_max <= N");
  }

  std::vector<std::future<std::vector<double>>> jobs;
  for (const std::int64_t kappa : ks) {
    jobs.push_back(std::async(std::launch::async, [kappa, n_inputs, err_max] {
      // Cumulative sums of the error distribution head: infoF for every Err
      // up to err_max in one pass.
      const std::vector<double> rows =
          error_weights(CloneParams(n_inputs, kappa * n_inputs), err_max);
      std::vector<double> cumulative;
      cumulative.reserve(rows.size());
      NeumaierSum acc;
      for (const double row : rows) {
        acc.add(row);
        cumulative.push_back(acc.value());
      }
      return cumulative;
    }));
  }
  std::vector<std::vector<double>> per_kappa;
  per_kappa.reserve(jobs.size());
  for (auto& job : jobs) per_kappa.push_back(job.get());

  SweepTable table;
  table.columns = {"kappa", "Err", "infoF"};
  table.metadata = {{"table", "fig3"},
                    {"backend", "log"},
                    {"n", std::to_string(n_inputs)},
                    {"kappas", join_int_list(ks)},
                    {"err_min", std::to_string(err_min)},
                    {"err_max", std::to_string(err_max)}};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::int64_t err = err_min; err <= err_max; ++err) {
      table.rows.push_back(
          {ks[i], err, per_kappa[i][static_cast<std::size_t>(err)]});
    }
  }
  return table;
}

SweepTable limit_study(std::int64_t kappa,
                       std::span<const std::int64_t> n_grid) {
  if (kappa < 2) {
    throw std::domain_error("kappa must be >= 2");
  }
  if (n_grid.empty() ||
      !std::is_sorted(n_grid.begin(), n_grid.end(), std::less_equal<>())) {
    throw std::domain_error("n grid must be nonempty and strictly increasing");
  }
  if (n_grid.front() < 1) {
    throw std::domain_error("N must be >= 1");
  }

  std::vector<std::future<double>> jobs;
  for (const std::int64_t n : n_grid) {
    jobs.push_back(std::async(std::launch::async, [kappa, n] {
      return fidelity(CloneParams(n, kappa * n));
    }));
  }
  std::vector<double> f;
  f.reserve(jobs.size());
  for (auto& job : jobs) f.push_back(job.get());

  SweepTable table;
  table.columns = {"N", "F", "extrapolated_limit"};
  table.metadata = {{"table", "limit"},
                    {"backend", "log"},
                    {"kappa", std::to_string(kappa)},
                    {"n_grid", join_int_list(n_grid)}};
  for (std::size_t i = 0; i < f.size(); ++i) {
    double limit = f[i];
    if (i > 0) {
      const double n_prev = static_cast<double>(n_grid[i - 1]);
      const double n_cur = static_cast<double>(n_grid[i]);
      limit = (n_cur * f[i] - n_prev * f[i - 1]) / (n_cur - n_prev);
    }
    table.rows.push_back({n_grid[i], f[i], limit});
  }
  return table;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_cell(const SweepTable::Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) {
    return std::to_string(std::get<std::int64_t>(cell));
  }
  return format_number(std::get<double>(cell));
}

void write_csv(const SweepTable& table, std::ostream& os) {
  for (const auto& [key, value] : table.metadata) {
    os << "# " << key << ": " << value << '\n';
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ',';
      os << format_cell(row[c]);
    }
    os << '\n';
  }
}

void write_csv_file(const SweepTable& table,
                    const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  write_csv(table, os);
}

SvgSpec default_svg_spec(const SweepTable& table) {
  for (const auto& [key, value] : table.metadata) {
    if (key != "table") continue;
    if (value == "fig2") return {"N", "F", "kappa"};
    if (value == "fig3") return {"Err", "infoF", "kappa"};
    if (value == "limit") return {"N", "F", ""};
  }
  if (table.columns.size() < 2) {
    throw std::domain_error("table has too few columns to plot");
  }
  return {table.columns.front(), table.columns.back(), ""};
}

void write_svg(const SweepTable& table, const SvgSpec& spec,
               std::ostream& os) {
  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 80, kRight = 690, kTop = 30, kBottom = 430;
  constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                      "#9467bd", "#ff7f0e", "#8c564b"};

  const std::size_t xi = column_index(table, spec.x_col);
  const std::size_t yi = column_index(table, spec.y_col);
  const bool has_series = !spec.series_col.empty();
  const std::size_t si = has_series ? column_index(table, spec.series_col) : 0;
  if (table.rows.empty()) {
    throw std::domain_error("cannot plot an empty table");
  }

  // Series keyed by formatted cell value, in first-appearance order.
  std::vector<std::string> series_order;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double xmin = cell_as_double(table.rows[0][xi]), xmax = xmin;
  double ymin = cell_as_double(table.rows[0][yi]), ymax = ymin;
  for (const auto& row : table.rows) {
    const double x = cell_as_double(row[xi]);
    const double y = cell_as_double(row[yi]);
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    const std::string key = has_series ? format_cell(row[si]) : std::string();
    if (series.find(key) == series.end()) series_order.push_back(key);
    series[key].emplace_back(x, y);
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  const auto sx = [&](double x) {
    return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft);
  };
  const auto sy = [&](double y) {
    return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop);
  };
  char buf[160];

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                "stroke=\"black\"/>\n",
                kLeft, kBottom, kRight, kBottom);
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                "stroke=\"black\"/>\n",
                kLeft, kBottom, kLeft, kTop);
  os << buf;

  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = xmin + (xmax - xmin) * t / kTicks;
    const double fy = ymin + (ymax - ymin) * t / kTicks;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                  "text-anchor=\"middle\">%s</text>\n",
                  sx(fx), kBottom + 18.0, format_number(fx).c_str());
    os << buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                  "text-anchor=\"end\">%s</text>\n",
                  kLeft - 6.0, sy(fy) + 4.0, format_number(fy).c_str());
    os << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\" "
                "text-anchor=\"middle\">%s</text>\n",
                (kLeft + kRight) / 2, kHeight - 10.0, spec.x_col.c_str());
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\" "
                "text-anchor=\"middle\" transform=\"rotate(-90 16 %.1f)\">%s"
                "</text>\n",
                16.0, (kTop + kBottom) / 2, (kTop + kBottom) / 2,
                spec.y_col.c_str());
  os << buf;

  std::size_t color = 0;
  for (const std::string& key : series_order) {
    const char* stroke = kPalette[color % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[key]) {
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(x), sy(y));
      os << buf;
    }
    os << "\"/>\n";
    if (!key.empty()) {
      std::snprintf(buf, sizeof(buf),
                    "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                    "fill=\"%s\">%s=%s</text>\n",
                    kRight - 110.0, kTop + 16.0 * (color + 1), stroke,
                    spec.series_col.c_str(), key.c_str());
      os << buf;
    }
    ++color;
  }
  os << "</svg>\n";
}

void write_svg_file(const SweepTable& table, const SvgSpec& spec,
                    const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  write_svg(table, spec, os);
}

}  // namespace qcm
