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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>

#include <json.hpp>

#include "cpforce/atoms.hpp"
#include "cpforce/cp_solver.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/parallel.hpp"
#include "cpforce/plate_solver.hpp"
#include "cpforce/spectral.hpp"
#include "cpforce/units.hpp"

namespace cpforce::verify {

namespace {

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Check make_check(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), std::isfinite(value) && value < threshold, value, threshold,
          std::move(detail)};
}

// Runs `body` and records a failed check if it throws.
void guarded(Report& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.checks.push_back({name, false, NAN, 0.0, std::string("exception: ") + e.what()});
  }
}

SolverOptions static_options(bool magnetic) {
  SolverOptions opts;
  opts.response.frequency_dependent = false;
  opts.response.include_magnetic = magnetic;
  opts.workers = workers_from_environment();
  return opts;
}

// Separation at which tau_norm takes the given value.
double separation_for_tau(double tau, double T) {
  using namespace units;
  return tau * kHbar * kSpeedOfLight / (4.0 * std::numbers::pi * kBoltzmann * T);
}

template <class F>
Report timed(const char* suite, F&& body) {
  Report report{suite, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  body(report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace

bool Report::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string Report::to_json() const {
  nlohmann::json out = {{"suite", suite}, {"passed", passed()}, {"seconds", seconds}};
  auto arr = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"threshold", c.threshold}};
    j["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  return out.dump(2);
}

Report oracle() {
  return timed("oracle", [](Report& report) {
    const AtomModel atom = presets::hydrogen();
    const WallModel wall = presets::ideal_metal();
    const SolverOptions opts = static_options(true);
    struct Point {
      double a_um, T;
    };
    for (const Point p : {Point{1, 1}, Point{5, 1}, Point{10, 1}, Point{1, 300}}) {
      const std::string tag = fmt("a=%gum T=%gK", p.a_um, p.T);
      guarded(report, "oracle " + tag, [&] {
        const double a = p.a_um * 1e-4;
        const double beta0 = static_susceptibility(atom, p.T);
        const double generic = cp_force(atom, wall, a, p.T, opts).f_total;
        const double series = ideal_metal_series_force(atom.alpha0, beta0, a, p.T);
        const double closed = ideal_metal_static_force(atom.alpha0, beta0, a, p.T);
        report.checks.push_back(make_check("generic-series " + tag, rel(generic, series), 1e-9));
        report.checks.push_back(make_check("generic-closed " + tag, rel(generic, closed), 1e-9));
        report.checks.push_back(make_check("series-closed " + tag, rel(series, closed), 1e-9));
      });
    }
  });
}

Report limits() {
  return timed("limits", [](Report& report) {
    const AtomModel atom = presets::hydrogen();
    const WallModel wall = presets::ideal_metal();
    using namespace units;

    guarded(report, "zero-temperature tau=1e-4", [&] {
      const double T = 1.0;
      const double a = separation_for_tau(1e-4, T);
      const double limit = -3.0 * kHbar * kSpeedOfLight * atom.alpha0 / (2.0 * std::numbers::pi);
      const double generic = std::pow(a, 5) * cp_force(atom, wall, a, T, static_options(false)).f_total;
      const double closed = std::pow(a, 5) * ideal_metal_static_force(atom.alpha0, 0.0, a, T);
      report.checks.push_back(make_check("zero-temperature generic tau=1e-4", rel(generic, limit), 1e-3,
                                         fmt("a5F=%.12e limit=%.12e", generic, limit)));
      report.checks.push_back(make_check("zero-temperature closed tau=1e-4", rel(closed, limit), 1e-3,
                                         fmt("a5F=%.12e limit=%.12e", closed, limit)));
    });

    struct Point {
      double tau, T;
    };
    for (const Point p : {Point{30, 1}, Point{30, 300}, Point{100, 1}, Point{1000, 300}}) {
      const std::string tag = fmt("tau=%g T=%gK", p.tau, p.T);
      guarded(report, "classical " + tag, [&] {
        const double a = separation_for_tau(p.tau, p.T);
        const double beta0 = static_susceptibility(atom, p.T);
        const double limit = -3.0 * kBoltzmann * p.T * (atom.alpha0 - beta0) / (4.0 * std::pow(a, 4));
        const double generic = cp_force(atom, wall, a, p.T, static_options(true)).f_total;
        report.checks.push_back(make_check("classical " + tag, rel(generic, limit), 1e-6,
                                           fmt("F=%.12e limit=%.12e", generic, limit)));
      });
    }
  });
}

Report rarefaction(bool quick) {
  return timed(quick ? "rarefaction-quick" : "rarefaction", [quick](Report& report) {
    const AtomModel atom = presets::hydrogen();
    SolverOptions opts;
    opts.workers = workers_from_environment();
    const std::vector<double> quick_ladder = {8e16, 4e16, 2e16, 1e16};
    const std::vector<double> full_ladder = {3.2e17, 1.6e17, 8e16, 4e16, 2e16, 1e16};
    const std::vector<double>& ladder = quick ? quick_ladder : full_ladder;
    std::vector<double> separations_um = {1.0};
    if (!quick) separations_um.push_back(5.0);
    for (const WallModel& wall :
         {presets::ideal_metal(), presets::ferro_dielectric(MuMode::ZeroFrequencyOnly)}) {
      for (double a_um : separations_um) {
        const std::string tag = wall.name + fmt(" a=%gum T=%gK", a_um, 1.0);
        guarded(report, "rarefaction " + tag, [&] {
          const RarefactionReport r = rarefaction_check(atom, wall, a_um * 1e-4, 1.0, ladder, opts);
          Check c = make_check("rarefaction " + tag, r.mismatch, 1e-4,
                               fmt("extrapolated=%.12e integrated=%.12e", r.extrapolated, r.integrated));
          if (!r.monotone) {
            c.passed = false;
            c.detail += "; per-atom values not monotone in N";
          }
          report.checks.push_back(std::move(c));
        });
      }
    }
  });
}

}  // namespace cpforce::verify
