// Copyright 2026 The cpforce Authors
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

// cpforce command-line front end: sweeps, presets and verification suites.

#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cpforce/atoms.hpp"
#include "cpforce/config.hpp"
#include "cpforce/cp_solver.hpp"
#include "cpforce/emit.hpp"
#include "cpforce/errors.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/parallel.hpp"
#include "cpforce/sweep.hpp"
#include "cpforce/units.hpp"
#include "verify.hpp"

namespace {

using namespace cpforce;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failed or runtime error
constexpr int kExitUsage = 2;    // bad flags or configuration
constexpr int kExitNotConverged = 3;

struct SweepFlags {
  std::string config;
  std::string atom;
  std::string wall;
  std::string mu_mode;
  double tau_rel = 0.0;
  double temp_k = 0.0;
  double a_min_m = 0.0;
  double a_max_m = 0.0;
  std::size_t points = 0;
  std::string spacing;
  std::string mode;
  double sum_rel_tol = 0.0;
  double quad_rel_tol = 0.0;
  std::size_t l_max = 0;
  std::string out = "-";
  std::string format;
  bool no_timestamp = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SweepSpec build_spec(const SweepFlags& f, const CLI::App& cmd) {
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  SweepSpec spec = f.config.empty() ? default_sweep_spec() : load_sweep_config(f.config);
  if (given("--atom")) {
    auto atom = presets::atom_by_name(f.atom);
    if (!atom) throw ConfigError("unknown atom preset '" + f.atom + "'");
    spec.atom = *atom;
  }
  if (given("--tau-rel")) spec.atom.tau_rel = f.tau_rel;
  if (given("--wall")) {
    auto wall = presets::wall_by_name(f.wall);
    if (!wall) throw ConfigError("unknown wall preset '" + f.wall + "'");
    spec.wall = *wall;
  }
  if (given("--mu-mode")) {
    auto mode = parse_mu_mode(f.mu_mode);
    if (!mode) throw ConfigError("--mu-mode must be zero-frequency-only or all-frequencies");
    auto* ferro = std::get_if<StaticFerromagnet>(&spec.wall.mu);
    if (!ferro) throw ConfigError("--mu-mode given but wall '" + spec.wall.name + "' is nonmagnetic");
    ferro->mode = *mode;
  }
  if (given("--temp-k")) spec.temperature_k = f.temp_k;
  if (given("--a-min-m")) spec.a_min_m = f.a_min_m;
  if (given("--a-max-m")) spec.a_max_m = f.a_max_m;
  if (given("--points")) spec.points = f.points;
  if (given("--spacing")) {
    auto s = parse_spacing(f.spacing);
    if (!s) throw ConfigError("--spacing must be log or linear");
    spec.spacing = *s;
  }
  if (given("--mode")) {
    auto m = parse_sweep_mode(f.mode);
    if (!m) throw ConfigError("--mode must be full, alpha_only or static_model");
    spec.mode = *m;
  }
  if (given("--sum-rel-tol")) spec.solver.sum_rel_tol = f.sum_rel_tol;
  if (given("--quad-rel-tol")) spec.solver.quad_rel_tol = f.quad_rel_tol;
  if (given("--l-max")) spec.solver.l_max = f.l_max;
  validate(spec);
  return spec;
}

OutputFormat choose_format(const SweepFlags& f) {
  if (!f.format.empty()) {
    auto fmt = parse_output_format(f.format);
    if (!fmt) throw ConfigError("--format must be csv or json");
    return *fmt;
  }
  const std::string& p = f.out;
  return p.size() > 5 && p.compare(p.size() - 5, 5, ".json") == 0 ? OutputFormat::Json
                                                                   : OutputFormat::Csv;
}

int run_sweep_command(const SweepFlags& f, const CLI::App& cmd) {
  const SweepSpec spec = build_spec(f, cmd);
  const OutputFormat format = choose_format(f);

  for (double a_m : {spec.a_min_m, spec.a_max_m}) {
    for (const std::string& w : validity_warnings(units::meters_to_cm(a_m), spec.temperature_k)) {
      std::cerr << "warning: " << w << '\n';
    }
  }

  const auto rows = run_sweep(spec, workers_from_environment());
  const std::string stamp = f.no_timestamp ? std::string() : utc_timestamp();
  if (f.out == "-") {
    if (format == OutputFormat::Csv) {
      write_csv(std::cout, rows);
    } else {
      write_json(std::cout, rows, spec, stamp);
    }
  } else {
    emit(rows, format, f.out, spec, stamp);
  }

  int bad = 0;
  for (const SweepRow& r : rows) {
    if (!r.converged) {
      ++bad;
      std::fprintf(stderr, "error: a = %.6e m did not converge (est_rel_err %.3e)\n", r.a_m,
                   r.est_rel_err);
    }
  }
  return bad ? kExitNotConverged : kExitOk;
}

void print_presets() {
  std::printf("atoms\n");
  std::printf("  %-6s %-14s %-14s %-4s %-4s %-10s %s\n", "name", "alpha0_cm3", "hbar_omega_a_ev",
              "g", "J", "tau_rel_s", "source");
  for (const std::string& n : presets::atom_names()) {
    const AtomModel a = *presets::atom_by_name(n);
    const char* source = n == "H" ? "hydrogen ground state, single-oscillator model"
                                  : "rubidium-87 ground state, single-oscillator model";
    std::printf("  %-6s %-14.4e %-14.4g %-4g %-4g %-10.1e %s\n", n.c_str(), a.alpha0,
                units::angular_frequency_to_ev(a.omega_a), a.g, a.J, a.tau_rel, source);
  }
  std::printf("walls\n");
  std::printf("  %-17s %-9s %-14s %-8s %s\n", "name", "eps", "parameter", "mu0", "source");
  for (const std::string& n : presets::wall_names()) {
    const WallModel w = *presets::wall_by_name(n);
    const char* model = "ideal";
    char param[48] = "-";
    const char* source = "perfect reflector";
    if (const auto* p = std::get_if<Plasma>(&w.eps)) {
      model = "plasma";
      std::snprintf(param, sizeof param, "omega_p=%geV", units::angular_frequency_to_ev(p->omega_p));
      source = n == "au-plasma" ? "gold, plasma model" : "iron, plasma model, static permeability";
    } else if (const auto* c = std::get_if<ConstantEps>(&w.eps)) {
      model = "constant";
      std::snprintf(param, sizeof param, "eps0=%g", c->eps0);
      source = "polymer with ferromagnetic inclusions";
    }
    double mu0 = 1.0;
    std::string mode;
    if (const auto* m = std::get_if<StaticFerromagnet>(&w.mu)) {
      mu0 = m->mu0;
      mode = std::string(" (") + to_string(m->mode) + ")";
    }
    std::printf("  %-17s %-9s %-14s %-8g %s%s\n", n.c_str(), model, param, mu0, source, mode.c_str());
  }
  std::printf("constants (CGS)\n%s", units::constants_table().c_str());
}

int run_verify(const std::string& suite, bool quick, const std::string& report_path) {
  verify::Report report;
  if (suite == "oracle") {
    report = verify::oracle();
  } else if (suite == "limits") {
    report = verify::limits();
  } else {
    report = verify::rarefaction(quick);
  }
  for (const verify::Check& c : report.checks) {
    std::fprintf(stderr, "[%s] %s: %.3e (< %.1e)%s%s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                 c.value, c.threshold, c.detail.empty() ? "" : "  ", c.detail.c_str());
  }
  const std::string json = report.to_json();
  if (report_path.empty() || report_path == "-") {
    std::cout << json << '\n';
  } else {
    std::ofstream out(report_path);
    if (!out) throw IoError("cannot open " + report_path + " for writing");
    out << json << '\n';
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Casimir-Polder forces between atoms with magnetic moments and walls"};
  app.set_version_flag("--version", std::string(cpforce::version()));
  app.require_subcommand(1);

  SweepFlags sf;
  CLI::App* sweep = app.add_subcommand("sweep", "Force versus separation at fixed temperature");
  sweep->add_option("--config", sf.config, "JSON configuration file; flags override it")
      ->check(CLI::ExistingFile);
  sweep->add_option("--atom", sf.atom, "Atom preset (H, Rb87)");
  sweep->add_option("--wall", sf.wall, "Wall preset (ideal-metal, au-plasma, fe-plasma, ferro-dielectric)");
  sweep->add_option("--mu-mode", sf.mu_mode, "Wall permeability: zero-frequency-only or all-frequencies");
  sweep->add_option("--tau-rel", sf.tau_rel, "Atomic magnetic relaxation time, s");
  sweep->add_option("--temp-k", sf.temp_k, "Temperature, K");
  sweep->add_option("--a-min-m", sf.a_min_m, "Smallest separation, m");
  sweep->add_option("--a-max-m", sf.a_max_m, "Largest separation, m");
  sweep->add_option("--points", sf.points, "Number of separations");
  sweep->add_option("--spacing", sf.spacing, "log or linear");
  sweep->add_option("--mode", sf.mode, "full, alpha_only or static_model");
  sweep->add_option("--sum-rel-tol", sf.sum_rel_tol, "Matsubara sum relative tolerance");
  sweep->add_option("--quad-rel-tol", sf.quad_rel_tol, "Quadrature relative tolerance");
  sweep->add_option("--l-max", sf.l_max, "Matsubara index limit");
  sweep->add_option("--out", sf.out, "Output path, - for stdout")->capture_default_str();
  sweep->add_option("--format", sf.format, "csv or json (default from the --out extension)");
  sweep->add_flag("--no-timestamp", sf.no_timestamp, "Omit the timestamp from JSON metadata");

  CLI::App* presets_cmd = app.add_subcommand("presets", "List atom and wall presets");

  std::string suite;
  bool quick = false;
  std::string report_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "oracle, rarefaction or limits")
      ->required()
      ->check(CLI::IsMember({"oracle", "rarefaction", "limits"}));
  verify_cmd->add_flag("--quick", quick, "Shorter rarefaction run");
  verify_cmd->add_option("--report", report_path, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return run_sweep_command(sf, *sweep);
    if (*presets_cmd) {
      print_presets();
      return kExitOk;
    }
    if (*verify_cmd) return run_verify(suite, quick, report_path);
  } catch (const cpforce::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
