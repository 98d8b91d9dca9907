// Copyright 2026 The qtfet Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include "qtfet/config.hpp"
#include "qtfet/errors.hpp"
#include "qtfet/output.hpp"
#include "qtfet/solvers.hpp"
#include "qtfet/sweep.hpp"

namespace qtfet::cli {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string plot;
  double tol = kDefaultResidualTolerance;
  unsigned threads = 1;
  std::uint64_t seed = 0;  // reserved for stochastic features; unused
  double t_final = 1000.0;
  double dt = kDefaultTimeStep;
  std::size_t samples = 201;
};

int cmd_steady(const Options& opt, std::ostream& out) {
  const SystemParams params = load_params(opt.config);
  const auto result = solve_steady_state(params, opt.tol);
  const auto pops = reduced_populations(result.state);
  out << std::setprecision(10);
  out << "J_L      = " << result.currents.j_l << '\n'
      << "J_M      = " << result.currents.j_m << '\n'
      << "J_R      = " << result.currents.j_r << '\n'
      << "sum      = " << result.currents.sum() << '\n'
      << "residual = " << result.residual << '\n';
  out << "populations left   = " << pops.left[0] << ' ' << pops.left[1] << '\n'
      << "populations middle = " << pops.middle[0] << ' ' << pops.middle[1] << ' '
      << pops.middle[2] << '\n'
      << "populations right  = " << pops.right[0] << ' ' << pops.right[1] << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  SweepSpec spec = load_sweep_spec(opt.config);
  if (!opt.out.empty()) spec.output_path = opt.out;
  if (!opt.plot.empty()) spec.plot_path = opt.plot;
  if (spec.output_path.empty()) {
    throw ConfigError("no CSV output path: set [sweep] output or pass --out");
  }
  const auto rows = run_sweep(spec, RunOptions{.tol = opt.tol, .threads = opt.threads});
  emit_csv(rows, spec, spec.output_path);
  if (!spec.plot_path.empty()) emit_plot(rows, spec, spec.plot_path);
  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const SweepRow& r) { return r.status != PointStatus::ok; });
  out << rows.size() << " points written to " << spec.output_path;
  if (!spec.plot_path.empty()) out << ", plot " << spec.plot_path;
  out << " (" << failed << " solver failures)\n";
  return kExitOk;
}

int cmd_evolve(const Options& opt, std::ostream& out) {
  const SystemParams params = load_params(opt.config);
  const ComplexMatrix h = total_hamiltonian(params);
  const auto channels = bath_channels(params);

  std::ofstream csv(opt.out, std::ios::binary | std::ios::trunc);
  if (!csv) throw Error("cannot open '" + opt.out + "' for writing");
  csv << "t,j_l,j_m,j_r,trace\n";
  const auto observer = [&](double t, const ComplexMatrix& rho) {
    const auto j = heat_currents(h, channels, rho);
    csv << format_double(t) << ',' << format_double(j.j_l) << ',' << format_double(j.j_m) << ','
        << format_double(j.j_r) << ',' << format_double(trace(rho).real()) << '\n';
  };
  const auto final_state =
      evolve(DensityMatrix::maximally_mixed(h.dim()), h, channels,
             EvolveOptions{.t_final = opt.t_final, .dt_max = opt.dt, .samples = opt.samples,
                           .observer = observer});
  csv.flush();
  if (!csv) throw Error("write to '" + opt.out + "' failed");
  const auto j = heat_currents(h, channels, final_state.matrix());
  out << std::setprecision(10) << "t = " << opt.t_final << ": J_L = " << j.j_l
      << ", J_M = " << j.j_m << ", J_R = " << j.j_r << '\n'
      << opt.samples << " samples written to " << opt.out << '\n';
  return kExitOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const SystemParams params =
      opt.config.empty() ? transfer_characteristic_params() : load_params(opt.config);
  const auto results = run_checks(params, opt.tol);
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "all checks passed\n" : "some checks failed\n");
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady states and heat currents of a qubit-qutrit-qubit thermal transistor", "qtfet"};
  app.require_subcommand(1);
  Options opt;

  const auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "steady-state residual tolerance")
        ->check(CLI::PositiveNumber);
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "reserved for future stochastic features (unused)");
  };

  auto* steady = app.add_subcommand("steady", "solve one steady state and print the currents");
  steady->add_option("--config", opt.config, "parameter file")->required();
  add_tol(steady);
  add_seed(steady);

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep from a config file");
  sweep->add_option("--config", opt.config, "sweep config file")->required();
  sweep->add_option("--out", opt.out, "CSV output path (overrides [sweep] output)");
  sweep->add_option("--plot", opt.plot, "SVG output path (overrides [sweep] plot)");
  sweep->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  add_tol(sweep);
  add_seed(sweep);

  auto* evolve_cmd = app.add_subcommand("evolve", "RK4 time trace of the currents to a CSV");
  evolve_cmd->add_option("--config", opt.config, "parameter file")->required();
  evolve_cmd->add_option("--out", opt.out, "CSV output path")->required();
  evolve_cmd->add_option("--t-final", opt.t_final, "final time in 1/w0")
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--dt", opt.dt, "maximum RK4 step")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--samples", opt.samples, "number of output rows")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
  add_tol(evolve_cmd);
  add_seed(evolve_cmd);

  auto* check = app.add_subcommand("check", "run the built-in invariant suite");
  check->add_option("--config", opt.config, "parameter file (default: transfer-curve point)");
  add_tol(check);
  add_seed(check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (steady->parsed()) return cmd_steady(opt, out);
    if (sweep->parsed()) return cmd_sweep(opt, out);
    if (evolve_cmd->parsed()) return cmd_evolve(opt, out);
    if (check->parsed()) return cmd_check(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qtfet::cli
