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
// qcm command line front end. Every command is deterministic for fixed
// flags; configuration is flags-only. Exit codes: 0 success, 1 failed
// oracle certification, 2 invalid flags or arguments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcm/cloner.hpp"
#include "qcm/ensemble.hpp"
#include "qcm/oracle.hpp"
#include "qcm/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;

// The exact backend is refused beyond this output count; big-rational terms
// grow with M! and stop being worth it. `auto` switches to log there.
constexpr std::int64_t kExactBackendCap = 200;

struct ClonerArgs {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t kappa = 0;
  std::string backend = "auto";
  std::string format = "text";
  std::string out;
};

void add_output_flags(CLI::App* cmd, ClonerArgs& args,
                      const std::vector<std::string>& formats) {
  cmd->add_option("--backend", args.backend, "numeric backend")
      ->check(CLI::IsMember({"exact", "log", "auto"}));
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", args.out, "write output to a file instead of stdout");
}

void add_cloner_flags(CLI::App* cmd, ClonerArgs& args) {
  cmd->add_option("--n", args.n, "number of input copies N")->required();
  auto* m_opt = cmd->add_option("--m", args.m, "number of output copies M");
  auto* k_opt =
      cmd->add_option("--kappa", args.kappa, "copy multiplier, M = kappa*N");
  m_opt->excludes(k_opt);
  k_opt->excludes(m_opt);
  add_output_flags(cmd, args, {"csv", "json", "text"});
}

qcm::CloneParams resolve_params(const ClonerArgs& args) {
  if (args.m == 0 && args.kappa == 0) {
    throw std::domain_error("one of --m or --kappa is required");
  }
  if (args.kappa != 0 && args.kappa < 1) {
    throw std::domain_error("--kappa must be >= 1");
  }
  const std::int64_t m = args.kappa != 0 ? args.kappa * args.n : args.m;
  return qcm::CloneParams(args.n, m);
}

std::string resolve_backend(const ClonerArgs& args, const qcm::CloneParams& p) {
  if (args.backend == "auto") {
    return p.outputs <= kExactBackendCap ? "exact" : "log";
  }
  if (args.backend == "exact" && p.outputs > kExactBackendCap) {
    throw std::domain_error("exact backend refused for M > 200; use --backend log");
  }
  return args.backend;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open for writing: " + out_path);
  }
  os << payload;
}

json params_json(const std::string& command, const qcm::CloneParams& p,
                 const std::string& backend) {
  json j;
  j["command"] = command;
  j["n"] = p.inputs;
  j["m"] = p.outputs;
  if (const auto kappa = p.kappa()) j["kappa"] = *kappa;
  j["backend"] = backend;
  return j;
}

// --- scalar commands (fidelity, info-fidelity) ------------------------------

int run_scalar(const std::string& command, const ClonerArgs& args,
               std::optional<std::int64_t> err) {
  const qcm::CloneParams p = resolve_params(args);
  const std::string backend = resolve_backend(args, p);
  double value = 0.0;
  if (backend == "exact") {
    value = err ? qcm::to_double(qcm::info_fidelity_exact(p, *err))
                : qcm::to_double(qcm::fidelity_exact(p));
  } else {
    value = err ? qcm::info_fidelity(p, *err) : qcm::fidelity(p);
  }

  if (args.format == "json") {
    json j = params_json(command, p, backend);
    if (err) j["err"] = *err;
    j["value"] = value;
    emit(j.dump() + "\n", args.out);
  } else if (args.format == "csv") {
    std::ostringstream os;
    os << "N,M" << (err ? ",Err" : "") << ",value\n";
    os << p.inputs << ',' << p.outputs;
    if (err) os << ',' << *err;
    os << ',' << qcm::format_number(value) << '\n';
    emit(os.str(), args.out);
  } else {
    emit(qcm::format_number(value) + "\n", args.out);
  }
  return 0;
}

// --- vector commands (rho, spectrum) ----------------------------------------

int run_rows(const std::string& command, const ClonerArgs& args,
             const std::string& index_name, const std::string& value_name,
             const std::vector<double>& values, const qcm::CloneParams& p,
             const std::string& backend, const json& extra) {
  if (args.format == "json") {
    json j = params_json(command, p, backend);
    for (const auto& [key, val] : extra.items()) j[key] = val;
    j[value_name] = values;
    emit(j.dump() + "\n", args.out);
    return 0;
  }
  std::ostringstream os;
  if (args.format == "csv") os << index_name << ',' << value_name << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << i << ',' << qcm::format_number(values[i]) << '\n';
  }
  emit(os.str(), args.out);
  return 0;
}

int run_rho(const ClonerArgs& args, std::int64_t block_flag) {
  const qcm::CloneParams p = resolve_params(args);
  const std::string backend = resolve_backend(args, p);
  const std::int64_t block = block_flag > 0 ? block_flag : p.inputs;
  std::vector<double> coeffs;
  if (backend == "exact") {
    for (const qcm::Rational& c :
         qcm::reduced_diagonal_exact(p, block).coeffs) {
      coeffs.push_back(qcm::to_double(c));
    }
  } else {
    coeffs = qcm::reduced_diagonal(p, block).coeffs;
  }
  return run_rows("rho", args, "k", "coeffs", coeffs, p, backend,
                  json{{"block", block}});
}

int run_spectrum(const ClonerArgs& args) {
  const qcm::CloneParams p = resolve_params(args);
  const std::string backend = resolve_backend(args, p);
  std::vector<double> weights;
  if (backend == "exact") {
    for (const qcm::Rational& w : qcm::spectrum_exact(p).weights) {
      weights.push_back(qcm::to_double(w));
    }
  } else {
    weights = qcm::spectrum(p).weights;
  }
  return run_rows("spectrum", args, "j", "weights", weights, p, backend,
                  json::object());
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::vector<std::int64_t> kappas = {2, 3, 4, 8};
  std::int64_t n = 1000;
  std::int64_t n_min = 1;
  std::int64_t n_max = 100;
  std::int64_t err_min = 1;
  std::int64_t err_max = 10;
  std::int64_t kappa = 2;
  std::vector<std::int64_t> grid = {1000, 10000, 100000};
  std::string out;
  std::string svg;
  std::string format = "text";
};

int finish_sweep(const qcm::SweepTable& table, const std::string& name,
                 const SweepArgs& args) {
  const std::string out = args.out.empty() ? name + ".csv" : args.out;
  qcm::write_csv_file(table, out);
  if (!args.svg.empty()) {
    qcm::write_svg_file(table, qcm::default_svg_spec(table), args.svg);
  }
  if (args.format == "json") {
    json j;
    j["command"] = "sweep";
    j["table"] = name;
    j["rows"] = table.rows.size();
    j["out"] = out;
    if (!args.svg.empty()) j["svg"] = args.svg;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "wrote " << out << " (" << table.rows.size() << " rows)\n";
    if (!args.svg.empty()) std::cout << "wrote " << args.svg << "\n";
  }
  return 0;
}

// --- oracle-check ------------------------------------------------------------

struct OracleArgs {
  std::int64_t max_n = 3;
  std::int64_t max_kappa = 3;
  std::string format = "text";
  std::string out;
};

int run_oracle_check(const OracleArgs& args) {
  constexpr double kTol = 1e-10;
  bool all_pass = true;
  double worst = 0.0;
  json cases = json::array();
  std::ostringstream os;
  for (std::int64_t n = 1; n <= args.max_n; ++n) {
    for (std::int64_t kappa = 2; kappa <= args.max_kappa; ++kappa) {
      const std::int64_t m = kappa * n;
      if (m > qcm::kMaxDensityQubits) continue;
      for (std::int64_t block = 1; block <= n; ++block) {
        const qcm::CertifyReport report =
            qcm::certify(qcm::CloneParams(n, m), block);
        const bool pass = report.pass(kTol);
        all_pass = all_pass && pass;
        worst = std::max(worst, report.max_deviation());
        if (args.format == "json") {
          json c;
          c["n"] = n;
          c["m"] = m;
          c["block"] = block;
          c["max_deviation"] = report.max_deviation();
          c["pass"] = pass;
          cases.push_back(c);
        } else {
          os << "N=" << n << " M=" << m << " block=" << block
             << " max_deviation=" << qcm::format_number(report.max_deviation())
             << (pass ? " pass" : " FAIL") << '\n';
        }
      }
    }
  }
  if (args.format == "json") {
    json j;
    j["command"] = "oracle-check";
    j["max_n"] = args.max_n;
    j["max_kappa"] = args.max_kappa;
    j["tolerance"] = kTol;
    j["cases"] = cases;
    j["max_deviation"] = worst;
    j["pass"] = all_pass;
    emit(j.dump() + "\n", args.out);
  } else {
    os << (all_pass ? "all certifications passed" : "certification FAILED")
       << " (max deviation " << qcm::format_number(worst) << ")\n";
    emit(os.str(), args.out);
  }
  return all_pass ? 0 : 1;
}

// --- ensemble-demo -----------------------------------------------------------

struct EnsembleArgs {
  std::int64_t n = 4;
  std::int64_t flips = 1;
  double beta_sq = 1.0;
  std::string omega = "sigma_z";
  std::string format = "text";
  std::string out;
};

int run_ensemble_demo(const EnsembleArgs& args) {
  if (args.flips < 0 || args.flips > args.n) {
    throw std::domain_error("--flips must lie in [0, N]");
  }
  if (args.beta_sq < 0.0 || args.beta_sq > 1.0) {
    throw std::domain_error("--beta2 must lie in [0, 1]");
  }
  qcm::EnsembleSpec spec;
  for (std::int64_t i = 0; i < args.n; ++i) {
    spec.members.push_back(qcm::PureState::basis(2, 0));
  }
  for (std::int64_t i = 0; i < args.flips; ++i) {
    spec.corruptions.push_back(
        {i, std::complex<double>(std::sqrt(args.beta_sq), 0.0), std::nullopt});
  }
  qcm::Observable omega = qcm::Observable::sigma_z();
  if (args.omega == "sigma_x") omega = qcm::Observable::sigma_x();
  if (args.omega == "sigma_y") omega = qcm::Observable::sigma_y();
  const qcm::ExpectationShift shift = qcm::expectation_shift(spec, omega);

  if (args.format == "json") {
    json j;
    j["command"] = "ensemble-demo";
    j["n"] = args.n;
    j["flips"] = args.flips;
    j["beta_sq"] = args.beta_sq;
    j["omega"] = args.omega;
    j["delta"] = shift.delta;
    j["bound"] = shift.bound;
    emit(j.dump() + "\n", args.out);
  } else {
    std::ostringstream os;
    os << "delta," << qcm::format_number(shift.delta) << '\n';
    os << "bound," << qcm::format_number(shift.bound) << '\n';
    emit(os.str(), args.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quantities of the universal symmetric N->M qubit cloning machine"};
  app.require_subcommand(1);

  ClonerArgs fidelity_args;
  auto* fidelity_cmd =
      app.add_subcommand("fidelity", "block fidelity of N output qubits");
  add_cloner_flags(fidelity_cmd, fidelity_args);

  ClonerArgs info_args;
  std::int64_t info_err = 0;
  auto* info_cmd = app.add_subcommand(
      "info-fidelity", "probability of at most Err erroneous qubits");
  add_cloner_flags(info_cmd, info_args);
  info_cmd->add_option("--err", info_err, "maximal tolerated error count")
      ->required();

  ClonerArgs rho_args;
  std::int64_t rho_block = 0;
  auto* rho_cmd = app.add_subcommand(
      "rho", "diagonal of a reduced block in the symmetric basis");
  add_cloner_flags(rho_cmd, rho_args);
  rho_cmd->add_option("--block", rho_block, "block size n (default N)");

  ClonerArgs spectrum_args;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "output mixture weights alpha_j^2");
  add_cloner_flags(spectrum_cmd, spectrum_args);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate a parameter sweep");
  sweep_cmd->require_subcommand(1);
  auto* fig2_cmd = sweep_cmd->add_subcommand("fig2", "F over N per kappa");
  fig2_cmd->add_option("--kappas", sweep_args.kappas, "copy multipliers")
      ->delimiter(',');
  fig2_cmd->add_option("--n-min", sweep_args.n_min, "first N");
  fig2_cmd->add_option("--n-max", sweep_args.n_max, "last N");
  auto* fig3_cmd =
      sweep_cmd->add_subcommand("fig3", "infoF over Err per kappa");
  fig3_cmd->add_option("--n", sweep_args.n, "number of input copies N");
  fig3_cmd->add_option("--kappas", sweep_args.kappas, "copy multipliers")
      ->delimiter(',');
  fig3_cmd->add_option("--err-min", sweep_args.err_min, "first Err");
  fig3_cmd->add_option("--err-max", sweep_args.err_max, "last Err");
  auto* limit_cmd =
      sweep_cmd->add_subcommand("limit", "large-N fidelity extrapolation");
  limit_cmd->add_option("--kappa", sweep_args.kappa, "copy multiplier");
  limit_cmd->add_option("--grid", sweep_args.grid, "N grid (increasing)")
      ->delimiter(',');
  for (CLI::App* cmd : {fig2_cmd, fig3_cmd, limit_cmd}) {
    cmd->add_option("--out", sweep_args.out, "CSV path (default <table>.csv)");
    cmd->add_option("--svg", sweep_args.svg, "also write an SVG line plot");
    cmd->add_option("--format", sweep_args.format, "stdout summary format")
        ->check(CLI::IsMember({"json", "text"}));
  }

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "brute-force certification of the closed forms");
  oracle_cmd->add_option("--max-n", oracle_args.max_n, "largest N");
  oracle_cmd->add_option("--max-kappa", oracle_args.max_kappa,
                         "largest kappa");
  oracle_cmd->add_option("--format", oracle_args.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  oracle_cmd->add_option("--out", oracle_args.out, "write output to a file");

  EnsembleArgs ensemble_args;
  auto* ensemble_cmd = app.add_subcommand(
      "ensemble-demo", "expectation shift of a corrupted ensemble");
  ensemble_cmd->add_option("--n", ensemble_args.n, "ensemble size");
  ensemble_cmd->add_option("--flips", ensemble_args.flips,
                           "number of corrupted members");
  ensemble_cmd->add_option("--beta2", ensemble_args.beta_sq,
                           "|beta|^2 of each corruption");
  ensemble_cmd
      ->add_option("--omega", ensemble_args.omega, "observable preset")
      ->check(CLI::IsMember({"sigma_x", "sigma_y", "sigma_z"}));
  ensemble_cmd->add_option("--format", ensemble_args.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  ensemble_cmd->add_option("--out", ensemble_args.out,
                           "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(fidelity_cmd)) {
      return run_scalar("fidelity", fidelity_args, std::nullopt);
    }
    if (app.got_subcommand(info_cmd)) {
      return run_scalar("info-fidelity", info_args, info_err);
    }
    if (app.got_subcommand(rho_cmd)) {
      return run_rho(rho_args, rho_block);
    }
    if (app.got_subcommand(spectrum_cmd)) {
      return run_spectrum(spectrum_args);
    }
    if (app.got_subcommand(sweep_cmd)) {
      if (sweep_cmd->got_subcommand(fig2_cmd)) {
        return finish_sweep(qcm::sweep_fig2(sweep_args.kappas,
                                            sweep_args.n_min,
                                            sweep_args.n_max),
                            "fig2", sweep_args);
      }
      if (sweep_cmd->got_subcommand(fig3_cmd)) {
        return finish_sweep(
            qcm::sweep_fig3(sweep_args.n, sweep_args.kappas,
                            sweep_args.err_min, sweep_args.err_max),
            "fig3", sweep_args);
      }
      return finish_sweep(qcm::limit_study(sweep_args.kappa, sweep_args.grid),
                          "limit", sweep_args);
    }
    if (app.got_subcommand(oracle_cmd)) {
      return run_oracle_check(oracle_args);
    }
    if (app.got_subcommand(ensemble_cmd)) {
      return run_ensemble_demo(ensemble_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "qcm: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
