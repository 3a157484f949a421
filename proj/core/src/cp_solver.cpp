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

#include "cpforce/cp_solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cpforce/errors.hpp"
#include "cpforce/quadrature.hpp"
#include "cpforce/reflection.hpp"
#include "cpforce/units.hpp"

namespace cpforce {
namespace {

enum class Kernel { Force, FreeEnergy };

void check_options(const SolverOptions& opts) {
  if (!(opts.sum_rel_tol > 0.0)) throw DomainError("sum_rel_tol must be > 0");
  if (!(opts.quad_rel_tol > 0.0)) throw DomainError("quad_rel_tol must be > 0");
  if (opts.l_max < 1) throw DomainError("l_max must be >= 1");
}

/// Unscaled l-th term {alpha * I_alpha, beta * I_beta} of either kernel.
TermSample<2> matsubara_term(const AtomModel& atom, const WallModel& wall,
                             const SpectralContext& ctx, std::size_t l, const SolverOptions& opts,
                             Kernel kernel) {
  const double xi = ctx.frequency(l);
  const double zeta = ctx.zeta(l);
  const AtomResponse resp = response_at(atom, xi, ctx.T, opts.response);
  const MediumResponse medium = wall_response(wall, zeta, l, ctx.omega_c);
  const double zeta2 = zeta * zeta;
  const bool force = kernel == Kernel::Force;

  auto integrand = [&](double y) -> std::array<double, 2> {
    const ReflectionPair r = fresnel(medium, y);
    const double envelope = (force ? y : 1.0) * std::exp(-y);
    const double mixed = zeta2 * (r.r_tm + r.r_te);
    const double y2 = 2.0 * y * y;
    return {envelope * (y2 * r.r_tm - mixed), envelope * (y2 * r.r_te - mixed)};
  };

  TermSample<2> s;
  if (resp.beta == 0.0) {
    auto q = integrate_tail_n<1>([&](double y) { return std::array<double, 1>{integrand(y)[0]}; },
                                 zeta, opts.quad_rel_tol);
    s.value = {resp.alpha * q.value[0], 0.0};
    s.abs_error = q.converged ? resp.alpha * q.error[0] : std::numeric_limits<double>::infinity();
    return s;
  }
  auto q = integrate_tail_n<2>(integrand, zeta, opts.quad_rel_tol);
  s.value = {resp.alpha * q.value[0], resp.beta * q.value[1]};
  s.abs_error = q.converged ? resp.alpha * q.error[0] + resp.beta * std::abs(q.error[1])
                            : std::numeric_limits<double>::infinity();
  return s;
}

struct SplitSum {
  double alpha = 0.0;
  double beta = 0.0;
  ConvergenceReport report;
};

SplitSum sum_kernel(const AtomModel& atom, const WallModel& wall, const SpectralContext& ctx,
                    const SolverOptions& opts, Kernel kernel) {
  SumOptions sum;
  sum.rel_tol = opts.sum_rel_tol;
  sum.l_max = opts.l_max;
  sum.workers = opts.workers;
  auto r = primed_sum_n<2>(
      [&](std::size_t l) { return matsubara_term(atom, wall, ctx, l, opts, kernel); }, sum);
  const double prefactor = kernel == Kernel::Force
                               ? -units::kBoltzmann * ctx.T / (8.0 * std::pow(ctx.a, 4))
                               : -units::kBoltzmann * ctx.T / (8.0 * std::pow(ctx.a, 3));
  SplitSum out;
  out.alpha = prefactor * r.value[0];
  out.beta = prefactor * r.value[1];
  out.report = r.report;
  out.report.converged = r.report.converged && out.report.quad_error_estimate < opts.quad_rel_tol;
  return out;
}

std::string describe(const char* what, const AtomModel& atom, const WallModel& wall, double a,
                     double T, const ConvergenceReport& rep) {
  std::ostringstream msg;
  msg << what << " did not converge for atom '" << atom.name << "', wall '" << wall.name
      << "', a = " << a << " cm, T = " << T << " K (terms " << rep.terms_used
      << ", last ratio " << rep.last_term_ratio << ", quad error " << rep.quad_error_estimate
      << ")";
  return msg.str();
}

}  // namespace

ForceResult cp_force_unchecked(const AtomModel& atom, const WallModel& wall, double a, double T,
                               const SolverOptions& opts) {
  validate(atom);
  validate(wall);
  check_options(opts);
  const SpectralContext ctx = SpectralContext::make(a, T);
  const SplitSum s = sum_kernel(atom, wall, ctx, opts, Kernel::Force);
  ForceResult r;
  r.f_alpha = s.alpha;
  r.f_beta = s.beta;
  r.f_total = s.alpha + s.beta;
  r.report = s.report;
  r.warnings = validity_warnings(a, T);
  return r;
}

ForceResult cp_force(const AtomModel& atom, const WallModel& wall, double a, double T,
                     const SolverOptions& opts) {
  ForceResult r = cp_force_unchecked(atom, wall, a, T, opts);
  if (!r.report.converged) {
    throw ConvergenceError(describe("cp_force", atom, wall, a, T, r.report), r.report);
  }
  return r;
}

FreeEnergyResult cp_free_energy(const AtomModel& atom, const WallModel& wall, double a, double T,
                                const SolverOptions& opts) {
  validate(atom);
  validate(wall);
  check_options(opts);
  const SpectralContext ctx = SpectralContext::make(a, T);
  const SplitSum s = sum_kernel(atom, wall, ctx, opts, Kernel::FreeEnergy);
  if (!s.report.converged) {
    throw ConvergenceError(describe("cp_free_energy", atom, wall, a, T, s.report), s.report);
  }
  FreeEnergyResult r;
  r.fe_alpha = s.alpha;
  r.fe_beta = s.beta;
  r.fe_total = s.alpha + s.beta;
  r.report = s.report;
  r.warnings = validity_warnings(a, T);
  return r;
}

std::array<double, 2> cp_force_term(const AtomModel& atom, const WallModel& wall,
                                    const SpectralContext& ctx, std::size_t l,
                                    const SolverOptions& opts) {
  const TermSample<2> s = matsubara_term(atom, wall, ctx, l, opts, Kernel::Force);
  const double prefactor = -units::kBoltzmann * ctx.T / (8.0 * std::pow(ctx.a, 4));
  return {prefactor * s.value[0], prefactor * s.value[1]};
}

double ideal_metal_bracket(double tau) {
  if (!(tau > 0.0)) throw DomainError("ideal_metal_bracket: tau must be > 0");
  if (tau < 1e-3) {
    const double t2 = tau * tau;
    const double t5 = t2 * t2 * tau;
    return 24.0 / tau - t5 / 1260.0 + t5 * t2 / 10080.0;
  }
  // Written in x = e^{-tau} so that large tau neither overflows nor cancels.
  const double x = std::exp(-tau);
  const double d = -std::expm1(-tau);
  const double d2 = d * d;
  return 3.0 + 6.0 * x / d + 6.0 * tau * x / d2 + 3.0 * tau * tau * x * (1.0 + x) / (d2 * d) +
         tau * tau * tau * x * (1.0 + 4.0 * x + x * x) / (d2 * d2);
}

double ideal_metal_static_force(double alpha0, double beta0, double a, double T) {
  const SpectralContext ctx = SpectralContext::make(a, T);
  return -units::kBoltzmann * T / (4.0 * std::pow(a, 4)) * (alpha0 - beta0) *
         ideal_metal_bracket(ctx.tau_norm);
}

double ideal_metal_series_force(double alpha0, double beta0, double a, double T,
                                std::size_t l_max) {
  const SpectralContext ctx = SpectralContext::make(a, T);
  CompensatedSum bracket;
  bracket.add(3.0);
  for (std::size_t l = 1; l <= l_max; ++l) {
    const double z = ctx.zeta(l);
    const double term = (6.0 + z * (6.0 + z * (3.0 + z))) * std::exp(-z);
    bracket.add(term);
    if (z > 40.0 && term < 1e-18 * bracket.value()) break;
  }
  return -units::kBoltzmann * T / (4.0 * std::pow(a, 4)) * (alpha0 - beta0) * bracket.value();
}

double deviation_percent(const ForceResult& r) {
  if (r.f_alpha == 0.0) throw DomainError("magnetic deviation undefined: f_alpha = 0");
  if (std::signbit(r.f_total) == std::signbit(r.f_alpha)) {
    // |F| - |F_alpha| = sign(F_alpha) * F_beta when both share a sign.
    return 100.0 * r.f_beta / r.f_alpha;
  }
  return 100.0 * (std::abs(r.f_total) - std::abs(r.f_alpha)) / std::abs(r.f_alpha);
}

double magnetic_deviation(const AtomModel& atom, const WallModel& wall, double a, double T,
                          const SolverOptions& opts) {
  SolverOptions o = opts;
  o.response.include_magnetic = true;
  return deviation_percent(cp_force(atom, wall, a, T, o));
}

std::vector<std::string> validity_warnings(double a, double T) {
  std::vector<std::string> out;
  const double a_um = a * 1e4;
  if (a_um < 0.5 || a_um > 20.0) {
    std::ostringstream msg;
    msg << "separation " << a_um
        << " um is outside [0.5, 20] um where the single-oscillator polarizability holds";
    out.push_back(msg.str());
  }
  if (T < 0.5 || T > 400.0) {
    std::ostringstream msg;
    msg << "temperature " << T
        << " K is outside [0.5, 400] K where the Curie-law susceptibility holds";
    out.push_back(msg.str());
  }
  return out;
}

}  // namespace cpforce
