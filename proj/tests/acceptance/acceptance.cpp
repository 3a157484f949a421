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

// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   cpforce_acceptance            run all criteria
//   cpforce_acceptance 5 7        run the listed criteria only
//
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpforce/atoms.hpp"
#include "cpforce/cp_solver.hpp"
#include "cpforce/emit.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/sweep.hpp"
#include "cpforce/units.hpp"
#include "verify.hpp"

using namespace cpforce;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
};

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

std::string printf_string(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string printf_string(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

double separation_for_tau(double tau, double T) {
  return tau * units::kHbar * units::kSpeedOfLight / (4.0 * std::numbers::pi * units::kBoltzmann * T);
}

SolverOptions static_model(bool magnetic) {
  SolverOptions o;
  o.response.frequency_dependent = false;
  o.response.include_magnetic = magnetic;
  return o;
}

Outcome from_report(const verify::Report& r, double budget_s) {
  double worst = 0.0;
  std::string worst_name;
  for (const auto& c : r.checks) {
    if (!c.passed || !std::isfinite(c.value)) {
      return {false, c.name + ": " + (c.detail.empty() ? "failed" : c.detail)};
    }
    if (c.value / c.threshold >= worst) {
      worst = c.value / c.threshold;
      worst_name = printf_string("%s %.2e (< %.0e)", c.name.c_str(), c.value, c.threshold);
    }
  }
  const bool fast = r.seconds < budget_s;
  return {r.passed() && fast,
          printf_string("%zu checks, worst %s; %.2f s (< %.0f s)", r.checks.size(), worst_name.c_str(),
                        r.seconds, budget_s)};
}

Outcome criterion_1() { return from_report(verify::oracle(), 10.0); }

Outcome criterion_2() {
  const auto h = presets::hydrogen();
  const double T = 1.0;
  const double a = separation_for_tau(1e-4, T);
  const double limit = -3.0 * units::kHbar * units::kSpeedOfLight * h.alpha0 / (2.0 * std::numbers::pi);
  const double a5f = std::pow(a, 5) * cp_force(h, presets::ideal_metal(), a, T, static_model(false)).f_total;
  const double d = rel(a5f, limit);
  return {d < 1e-3, printf_string("tau_norm=1e-4: a^5 F = %.9e, limit %.9e, departure %.2e (< 1e-3)", a5f,
                                  limit, d)};
}

Outcome criterion_3() {
  const auto h = presets::hydrogen();
  double worst = 0.0;
  for (double tau : {30.0, 60.0, 300.0}) {
    for (double T : {1.0, 300.0}) {
      const double a = separation_for_tau(tau, T);
      const double beta0 = static_susceptibility(h, T);
      const double limit = -3.0 * units::kBoltzmann * T * (h.alpha0 - beta0) / (4.0 * std::pow(a, 4));
      const double f = cp_force(h, presets::ideal_metal(), a, T, static_model(true)).f_total;
      worst = std::max(worst, rel(f, limit));
    }
  }
  return {worst < 1e-6, printf_string("tau_norm in {30, 60, 300}, T in {1, 300} K: max rel %.2e (< 1e-6)", worst)};
}

Outcome criterion_4() {
  const auto h = presets::hydrogen();
  const double b300 = static_susceptibility(h, 300.0);
  const double b1 = static_susceptibility(h, 1.0);
  const double ratio = b1 / h.alpha0;
  const bool ok = rel(b300, 5.2e-28) <= 0.01 && rel(b1, 1.56e-25) <= 0.01 && std::abs(ratio - 0.23) <= 0.01;
  return {ok, printf_string("beta(0;300K)=%.4e, beta(0;1K)=%.4e cm^3, beta/alpha0=%.4f", b300, b1, ratio)};
}

struct DeviationTarget {
  WallModel wall;
  double at_1um, at_10um;
};

std::vector<DeviationTarget> deviation_targets() {
  return {{presets::ideal_metal(), -0.018, -0.18},
          {presets::au_plasma(), -0.015, -0.15},
          {presets::fe_plasma(MuMode::ZeroFrequencyOnly), -8e-5, -0.13},
          {presets::ferro_dielectric(MuMode::ZeroFrequencyOnly), 0.04, 0.4}};
}

Outcome criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto h = presets::hydrogen(1e-8);
  bool ok = true;
  std::ostringstream s;
  for (const auto& t : deviation_targets()) {
    const double d1 = magnetic_deviation(h, t.wall, 1e-4, 1.0);
    const double d10 = magnetic_deviation(h, t.wall, 1e-3, 1.0);
    const bool good = rel(d1, t.at_1um) <= 0.2 && rel(d10, t.at_10um) <= 0.2;
    ok = ok && good;
    s << t.wall.name << ' ' << printf_string("%.3g%%/%.3g%%", d1, d10) << (good ? "" : " (off)") << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  s << printf_string("%.2f s (< 120 s)", secs);
  return {ok && secs < 120.0, s.str()};
}

Outcome criterion_6() {
  const auto h = presets::hydrogen();
  int bad = 0;
  for (const auto& t : deviation_targets()) {
    const bool expect_positive = t.at_1um < 0.0;
    for (double a : {1e-4, 3e-4, 1e-3}) {
      const double fb = cp_force(h, t.wall, a, 1.0).f_beta;
      if ((fb > 0.0) != expect_positive || fb == 0.0) ++bad;
    }
  }
  return {bad == 0, printf_string("12 (wall, a) points, %d with the wrong sign of f_beta", bad)};
}

Outcome criterion_7() {
  const WallModel pe{"nonmagnetic-dielectric", ConstantEps{3.0}, NonMagnetic{}};
  const auto f = cp_force(presets::hydrogen(), pe, 1e-4, 1.0);
  const double ratio = std::abs(f.f_beta) / std::abs(f.f_alpha);
  return {ratio < 1e-8, printf_string("a=1um: |f_beta|/|f_alpha| = %.3e (< 1e-8)", ratio)};
}

Outcome criterion_8() {
  const auto h = presets::hydrogen();
  double worst = 0.0;
  for (const WallModel& wall : {presets::ideal_metal(), presets::ferro_dielectric()}) {
    for (double a : {1e-4, 3e-4, 1e-3}) {
      for (double T : {1.0, 10.0, 300.0}) {
        const double step = a * 1e-4;
        const double fd = -(cp_free_energy(h, wall, a + step, T).fe_total -
                            cp_free_energy(h, wall, a - step, T).fe_total) /
                          (2.0 * step);
        worst = std::max(worst, rel(cp_force(h, wall, a, T).f_total, fd));
      }
    }
  }
  return {worst < 1e-6, printf_string("H/ideal-metal and H/ferro-dielectric, 3x3 (a, T): max rel %.2e (< 1e-6)", worst)};
}

Outcome criterion_9() { return from_report(verify::rarefaction(true), 60.0); }

std::string sweep_csv(unsigned workers) {
  std::ostringstream csv;
  for (const auto& t : deviation_targets()) {
    SweepSpec spec;
    spec.atom = presets::hydrogen();
    spec.wall = t.wall;
    write_csv(csv, run_sweep(spec, workers));
  }
  return csv.str();
}

Outcome criterion_10() {
  const std::string one = sweep_csv(1);
  const std::string four = sweep_csv(4);
  const bool same = one == four && !one.empty();
  return {same, printf_string("4 walls x 19 points, workers 1 vs 4: %zu bytes, %s", one.size(),
                              same ? "identical" : "DIFFERENT")};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "oracle triangle", criterion_1},
    {2, "zero-temperature limit", criterion_2},
    {3, "classical limit", criterion_3},
    {4, "static susceptibilities", criterion_4},
    {5, "deviation table", criterion_5},
    {6, "sign structure", criterion_6},
    {7, "nonmagnetic-dielectric null", criterion_7},
    {8, "thermodynamic consistency", criterion_8},
    {9, "rarefaction harness", criterion_9},
    {10, "determinism", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %2d %s: %s\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.summary.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
