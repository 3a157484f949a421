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

#include <cmath>
#include <numbers>
#include <vector>

#include "check.hpp"
#include "cpforce/cp_solver.hpp"
#include "cpforce/errors.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/units.hpp"
#include "oracle_values.hpp"

using namespace cpforce;

namespace {

SolverOptions static_model(bool magnetic = true) {
  SolverOptions o;
  o.response.frequency_dependent = false;
  o.response.include_magnetic = magnetic;
  return o;
}

double separation_for_tau(double tau, double T) {
  return tau * units::kHbar * units::kSpeedOfLight / (4.0 * std::numbers::pi * units::kBoltzmann * T);
}

std::vector<WallModel> preset_walls() {
  return {presets::ideal_metal(), presets::au_plasma(), presets::fe_plasma(), presets::ferro_dielectric()};
}

}  // namespace

TEST_SUITE("cp_solver") {

TEST_CASE("ideal metal against the high-precision sums") {
  const auto h = presets::hydrogen();
  const auto wall = presets::ideal_metal();
  struct Ref {
    double a, T, fa, fb, ea, eb;
  };
  const Ref refs[] = {
      {1e-4, 1.0, oracle::kIdealForceAlpha_1um_1K, oracle::kIdealForceBeta_1um_1K,
       oracle::kIdealEnergyAlpha_1um_1K, oracle::kIdealEnergyBeta_1um_1K},
      {1e-3, 1.0, oracle::kIdealForceAlpha_10um_1K, oracle::kIdealForceBeta_10um_1K,
       oracle::kIdealEnergyAlpha_10um_1K, oracle::kIdealEnergyBeta_10um_1K},
      {1e-4, 300.0, oracle::kIdealForceAlpha_1um_300K, oracle::kIdealForceBeta_1um_300K,
       oracle::kIdealEnergyAlpha_1um_300K, oracle::kIdealEnergyBeta_1um_300K},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.a);
    CAPTURE(r.T);
    const auto f = cp_force(h, wall, r.a, r.T);
    CHECK_REL(f.f_alpha, r.fa, 1e-9);
    CHECK_REL(f.f_beta, r.fb, 1e-9);
    const auto e = cp_free_energy(h, wall, r.a, r.T);
    CHECK_REL(e.fe_alpha, r.ea, 1e-9);
    CHECK_REL(e.fe_beta, r.eb, 1e-9);
  }
}

TEST_CASE("single Matsubara terms against direct quadrature") {
  const auto h = presets::hydrogen();
  const auto ctx = SpectralContext::make(1e-4, 1.0);
  struct Ref {
    WallModel wall;
    std::size_t l;
    double alpha, beta;
  };
  const Ref refs[] = {
      {presets::au_plasma(), 0, oracle::kTermAu_l0_alpha, oracle::kTermAu_l0_beta},
      {presets::au_plasma(), 1, oracle::kTermAu_l1_alpha, oracle::kTermAu_l1_beta},
      {presets::au_plasma(), 7, oracle::kTermAu_l7_alpha, oracle::kTermAu_l7_beta},
      {presets::fe_plasma(), 0, oracle::kTermFe_l0_alpha, oracle::kTermFe_l0_beta},
      {presets::fe_plasma(), 1, oracle::kTermFe_l1_alpha, oracle::kTermFe_l1_beta},
      {presets::fe_plasma(), 7, oracle::kTermFe_l7_alpha, oracle::kTermFe_l7_beta},
      {presets::ferro_dielectric(), 0, oracle::kTermFerroDiel_l0_alpha, oracle::kTermFerroDiel_l0_beta},
      {presets::ferro_dielectric(), 1, oracle::kTermFerroDiel_l1_alpha, oracle::kTermFerroDiel_l1_beta},
      {presets::ferro_dielectric(), 7, oracle::kTermFerroDiel_l7_alpha, oracle::kTermFerroDiel_l7_beta},
      {presets::ferro_dielectric(MuMode::AllFrequencies), 1, oracle::kTermFerroDielAll_l1_alpha,
       oracle::kTermFerroDielAll_l1_beta},
      {presets::ferro_dielectric(MuMode::AllFrequencies), 7, oracle::kTermFerroDielAll_l7_alpha,
       oracle::kTermFerroDielAll_l7_beta},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.wall.name);
    CAPTURE(r.l);
    const auto t = cp_force_term(h, r.wall, ctx, r.l);
    CHECK_REL(t[0], r.alpha, 1e-11);
    CHECK_REL(t[1], r.beta, 1e-10);
  }
}

TEST_CASE("ideal-metal bracket") {
  struct Ref {
    double tau, value;
  };
  const Ref refs[] = {{1e-4, oracle::kBracket_1em4},     {9e-4, oracle::kBracket_9em4},
                      {1e-3, oracle::kBracket_1em3},     {5.49e-3, oracle::kBracket_549em5},
                      {0.1, oracle::kBracket_1em1},      {1.0, oracle::kBracket_1},
                      {10.0, oracle::kBracket_10},       {32.9, oracle::kBracket_329em1}};
  for (const Ref& r : refs) {
    CAPTURE(r.tau);
    CHECK_REL(ideal_metal_bracket(r.tau), r.value, 1e-14);
  }
  // Both sides of the series switch-over agree.
  CHECK_REL(ideal_metal_bracket(std::nextafter(1e-3, 0.0)), ideal_metal_bracket(1e-3), 1e-14);
  CHECK_REL(ideal_metal_bracket(1e3), 3.0, 1e-15);
}

TEST_CASE("closed form, series and generic pipeline agree") {
  const auto h = presets::hydrogen();
  const auto wall = presets::ideal_metal();
  // Truncating once terms fall below sum_rel_tol leaves a geometric tail of
  // about sum_rel_tol / tau, so the smallest tau needs a tighter sum tolerance.
  SolverOptions opts = static_model();
  opts.sum_rel_tol = 1e-13;
  for (double tau : {1e-3, 1e-1, 1.0, 10.0}) {
    CAPTURE(tau);
    const double T = 1.0;
    const double a = separation_for_tau(tau, T);
    const double beta0 = static_susceptibility(h, T);
    const double closed = ideal_metal_static_force(h.alpha0, beta0, a, T);
    CHECK_REL(cp_force(h, wall, a, T, opts).f_total, closed, 1e-9);
    CHECK_REL(ideal_metal_series_force(h.alpha0, beta0, a, T), closed, 1e-9);
  }
  // Hot, far: only the first series term matters. tau_norm(10 um, 300 K) is
  // 16.46; the first neglected term is 2e-10 of the bracket at 20 um.
  const double a = 2e-3, T = 300.0;
  const auto ctx = SpectralContext::make(a, T);
  CHECK_REL(SpectralContext::make(1e-3, T).tau_norm, 16.46, 1e-3);
  CHECK_REL(ctx.tau_norm, 32.93, 1e-3);
  const double beta0 = static_susceptibility(h, T);
  const double closed = ideal_metal_static_force(h.alpha0, beta0, a, T);
  const double t = ctx.tau_norm;
  const double first = 3.0 + (6.0 + 6.0 * t + 3.0 * t * t + t * t * t) * std::exp(-t);
  CHECK_REL(closed, -units::kBoltzmann * T * (h.alpha0 - beta0) / (4.0 * std::pow(a, 4)) * first, 1e-9);
  CHECK_REL(ideal_metal_series_force(h.alpha0, beta0, a, T), closed, 1e-14);
}

TEST_CASE("closed form structure") {
  const double a = 1e-4, T = 1.0, alpha0 = 6.67e-25;
  CHECK(ideal_metal_static_force(alpha0, alpha0, a, T) == 0.0);
  const double ratio = ideal_metal_static_force(alpha0, 0.23 * alpha0, a, T) /
                       ideal_metal_static_force(alpha0, 0.0, a, T);
  CHECK_REL(ratio, 0.77, 1e-15);
  // Classical limit.
  const double far = separation_for_tau(200.0, T);
  CHECK_REL(ideal_metal_static_force(alpha0, 0.0, far, T),
            -3.0 * units::kBoltzmann * T * alpha0 / (4.0 * std::pow(far, 4)), 1e-15);
}

TEST_CASE("zero-temperature limit") {
  const auto h = presets::hydrogen();
  const double limit = -3.0 * units::kHbar * units::kSpeedOfLight * h.alpha0 / (2.0 * std::numbers::pi);
  for (double tau : {5e-3, 1e-3, 1e-4}) {
    CAPTURE(tau);
    const double a = separation_for_tau(tau, 1.0);
    const double a5 = std::pow(a, 5);
    CHECK(std::abs(a5 * ideal_metal_static_force(h.alpha0, 0.0, a, 1.0) / limit - 1.0) < 1e-3);
    CHECK(std::abs(a5 * cp_force(h, presets::ideal_metal(), a, 1.0, static_model(false)).f_total / limit -
                   1.0) < 1e-3);
  }
}

TEST_CASE("force is minus the derivative of the free energy") {
  const auto h = presets::hydrogen();
  for (const WallModel& wall : {presets::ideal_metal(), presets::ferro_dielectric(), presets::au_plasma()}) {
    for (double a : {1e-4, 4e-4}) {
      CAPTURE(wall.name);
      CAPTURE(a);
      const double step = a * 1e-4;
      const double fd = -(cp_free_energy(h, wall, a + step, 1.0).fe_total -
                          cp_free_energy(h, wall, a - step, 1.0).fe_total) /
                        (2.0 * step);
      CHECK_REL(cp_force(h, wall, a, 1.0).f_total, fd, 1e-6);
    }
  }
}

TEST_CASE("additivity and attraction") {
  for (const auto& atom : {presets::hydrogen(), presets::rubidium87()}) {
    for (const WallModel& wall : preset_walls()) {
      for (double a : {1e-4, 1e-3}) {
        const auto f = cp_force(atom, wall, a, 1.0);
        CHECK(f.f_total < 0.0);
        CHECK_REL(f.f_total, f.f_alpha + f.f_beta, 1e-12);
        const auto e = cp_free_energy(atom, wall, a, 1.0);
        CHECK_REL(e.fe_total, e.fe_alpha + e.fe_beta, 1e-12);
        CHECK(f.report.converged);
        CHECK(f.report.last_term_ratio < 1e-12);
        CHECK(f.report.quad_error_estimate < 1e-12);
      }
    }
  }
}

TEST_CASE("sign of the magnetic part") {
  const auto h = presets::hydrogen();
  for (double a : {1e-4, 3e-4, 1e-3}) {
    CHECK(cp_force(h, presets::ideal_metal(), a, 1.0).f_beta > 0.0);
    CHECK(cp_force(h, presets::au_plasma(), a, 1.0).f_beta > 0.0);
    CHECK(cp_force(h, presets::fe_plasma(), a, 1.0).f_beta > 0.0);
    CHECK(cp_force(h, presets::ferro_dielectric(), a, 1.0).f_beta < 0.0);
  }
}

TEST_CASE("magnetic deviation near an ideal metal") {
  const auto h = presets::hydrogen();
  CHECK(magnetic_deviation(h, presets::ideal_metal(), 1e-4, 1.0) == doctest::Approx(-0.018).epsilon(0.2));
  CHECK(magnetic_deviation(h, presets::ideal_metal(), 1e-3, 1.0) == doctest::Approx(-0.18).epsilon(0.2));
}

TEST_CASE("Rb87 deviation is negligible next to H") {
  for (double a : {1e-4, 3e-4, 1e-3}) {
    const double h = magnetic_deviation(presets::hydrogen(), presets::ideal_metal(), a, 1.0);
    const double rb = magnetic_deviation(presets::rubidium87(), presets::ideal_metal(), a, 1.0);
    CHECK(std::abs(rb) < 0.05 * std::abs(h));
  }
}

TEST_CASE("nonmagnetic dielectric: beta enters only through l >= 1") {
  // The magnetic part is not zero: r_TE vanishes at l = 0 but not at l >= 1,
  // where beta is suppressed by 1 / (1 + xi_l tau_rel). The ratio is of that
  // order, about 2.3e-8 at 1 um and growing linearly with a.
  const auto h = presets::hydrogen();
  const WallModel pe{"pe", ConstantEps{3.0}, NonMagnetic{}};
  const auto ctx = SpectralContext::make(1e-4, 1.0);
  CHECK(cp_force_term(h, pe, ctx, 0)[1] == 0.0);
  const auto near = cp_force(h, pe, 1e-4, 1.0);
  const auto far = cp_force(h, pe, 1e-3, 1.0);
  const double r1 = std::abs(near.f_beta / near.f_alpha);
  const double r10 = std::abs(far.f_beta / far.f_alpha);
  CHECK(r1 > 1e-8);
  CHECK(r1 < 5e-8);
  CHECK(r10 / r1 == doctest::Approx(10.0).epsilon(0.05));
  // Static-beta model with tau_rel = 0 removes the suppression: still
  // no l = 0 contribution, but a much larger ratio.
  const auto fast = presets::hydrogen(0.0);
  CHECK(std::abs(cp_force(fast, pe, 1e-4, 1.0).f_beta) > 100.0 * std::abs(near.f_beta));
}

TEST_CASE("where the magnetic part comes from") {
  // Share of |f_beta| carried by the l = 0 term; for the plasma and
  // ideal-metal walls the l >= 1 terms carry a few tenths of a percent or more.
  const auto h = presets::hydrogen(1e-8);
  const auto ctx = SpectralContext::make(1e-4, 1.0);
  auto zero_share = [&](const WallModel& w) {
    return 0.5 * cp_force_term(h, w, ctx, 0)[1] / cp_force(h, w, 1e-4, 1.0).f_beta;
  };
  CHECK(zero_share(presets::ferro_dielectric()) > 0.999);
  CHECK(zero_share(presets::ideal_metal()) > 0.995);
  CHECK(zero_share(presets::au_plasma()) > 0.995);
  CHECK(zero_share(presets::fe_plasma()) > 0.5);
}

TEST_CASE("vacuum wall gives zero force") {
  const auto f = cp_force(presets::hydrogen(), presets::vacuum(), 1e-4, 1.0);
  CHECK(f.f_total == 0.0);
  CHECK(f.f_alpha == 0.0);
  CHECK(f.f_beta == 0.0);
  CHECK(cp_free_energy(presets::hydrogen(), presets::vacuum(), 1e-4, 1.0).fe_total == 0.0);
  CHECK_THROWS_AS(magnetic_deviation(presets::hydrogen(), presets::vacuum(), 1e-4, 1.0), DomainError);
}

TEST_CASE("force magnitude decreases with separation") {
  const auto h = presets::hydrogen();
  for (const WallModel& wall : preset_walls()) {
    double prev = INFINITY;
    for (double a = 1e-4; a <= 1e-3 * (1 + 1e-12); a *= std::pow(10.0, 1.0 / 30.0)) {
      const auto f = cp_force(h, wall, a, 1.0);
      CHECK(f.f_total < 0.0);
      CHECK(std::abs(f.f_total) < prev);
      prev = std::abs(f.f_total);
    }
  }
}

TEST_CASE("worker count does not change the result") {
  SolverOptions four;
  four.workers = 4;
  for (const WallModel& wall : preset_walls()) {
    const auto a = cp_force(presets::hydrogen(), wall, 1e-4, 1.0);
    const auto b = cp_force(presets::hydrogen(), wall, 1e-4, 1.0, four);
    CHECK(a.f_alpha == b.f_alpha);
    CHECK(a.f_beta == b.f_beta);
    CHECK(a.report.terms_used == b.report.terms_used);
  }
}

TEST_CASE("non-convergence") {
  SolverOptions tight;
  tight.l_max = 10;
  CHECK_THROWS_AS(cp_force(presets::hydrogen(), presets::ideal_metal(), 1e-4, 1.0, tight), ConvergenceError);
  const auto r = cp_force_unchecked(presets::hydrogen(), presets::ideal_metal(), 1e-4, 1.0, tight);
  CHECK_FALSE(r.report.converged);
  CHECK(r.report.terms_used == 11);
  try {
    cp_force(presets::hydrogen(), presets::ideal_metal(), 1e-4, 1.0, tight);
  } catch (const ConvergenceError& e) {
    CHECK_FALSE(e.report().converged);
  }
}

TEST_CASE("input validation") {
  const auto h = presets::hydrogen();
  CHECK_THROWS_AS(cp_force(h, presets::ideal_metal(), 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(cp_force(h, presets::ideal_metal(), 1e-4, 0.0), DomainError);
  SolverOptions bad;
  bad.sum_rel_tol = 0.0;
  CHECK_THROWS_AS(cp_force(h, presets::ideal_metal(), 1e-4, 1.0, bad), DomainError);
  CHECK_THROWS_AS(cp_force(h, WallModel{"w", ConstantEps{0.2}, NonMagnetic{}}, 1e-4, 1.0), DomainError);
}

TEST_CASE("validity warnings") {
  CHECK(validity_warnings(1e-4, 1.0).empty());
  CHECK(validity_warnings(2e-3, 400.0).empty());
  CHECK_FALSE(validity_warnings(1e-5, 1.0).empty());
  CHECK_FALSE(validity_warnings(1e-4, 0.1).empty());
  CHECK_FALSE(validity_warnings(1e-4, 1000.0).empty());
  CHECK_FALSE(cp_force(presets::hydrogen(), presets::ideal_metal(), 3e-5, 1.0).warnings.empty());
}

}  // TEST_SUITE
