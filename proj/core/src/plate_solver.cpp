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

#include "cpforce/plate_solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cpforce/errors.hpp"
#include "cpforce/quadrature.hpp"
#include "cpforce/units.hpp"

namespace cpforce {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

MediumResponse gas_response(const DiluteGasWall& gas, const SpectralContext& ctx, std::size_t l) {
  const AtomResponse r = response_at(gas.atom, ctx.frequency(l), ctx.T, gas.response);
  return medium_from_susceptibilities(kFourPi * gas.number_density * r.alpha,
                                      kFourPi * gas.number_density * r.beta, ctx.zeta(l));
}

MediumResponse side_response(const PlateSide& side, const SpectralContext& ctx, std::size_t l) {
  if (const auto* wall = std::get_if<WallModel>(&side)) {
    return wall_response(*wall, ctx.zeta(l), l, ctx.omega_c);
  }
  return gas_response(std::get<DiluteGasWall>(side), ctx, l);
}

void validate_side(const PlateSide& side) {
  std::visit([](const auto& s) { validate(s); }, side);
}

// ln(1 - p e^{-y}) for 0 <= |p| <= 1.
double log_factor(double p, double y) {
  // For p = 1 and small y, 1 - e^{-y} loses digits unless taken via expm1.
  if (p == 1.0 && y < 0.6931471805599453) return std::log(-std::expm1(-y));
  return std::log1p(-p * std::exp(-y));
}

void check_unit_bound(double r, double y) {
  if (!(std::abs(r) <= 1.0 + 1e-14)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "plate_free_energy: |r| = " << std::abs(r) << " > 1 at y = " << y;
    throw NumericalError(msg.str());
  }
}

}  // namespace

void validate(const DiluteGasWall& gas) {
  validate(gas.atom);
  if (!(gas.number_density > 0.0) || !std::isfinite(gas.number_density)) {
    throw DomainError("dilute gas: number density must be > 0");
  }
  if (!(kFourPi * gas.number_density * gas.atom.alpha0 < 1e-3)) {
    throw DomainError("dilute gas: 4 pi N alpha(0) must be < 1e-3 for the rarefied limit");
  }
}

PlateResult plate_free_energy(const PlateSide& side1, const PlateSide& side2, double a, double T,
                              const SolverOptions& opts) {
  validate_side(side1);
  validate_side(side2);
  const SpectralContext ctx = SpectralContext::make(a, T);

  SumOptions sum;
  sum.rel_tol = opts.sum_rel_tol;
  sum.l_max = opts.l_max;
  sum.workers = opts.workers;

  auto r = primed_sum_n<1>(
      [&](std::size_t l) {
        const MediumResponse m1 = side_response(side1, ctx, l);
        const MediumResponse m2 = side_response(side2, ctx, l);
        auto integrand = [&](double y) -> std::array<double, 1> {
          const ReflectionPair r1 = fresnel(m1, y);
          const ReflectionPair r2 = fresnel(m2, y);
          check_unit_bound(r1.r_tm, y);
          check_unit_bound(r1.r_te, y);
          check_unit_bound(r2.r_tm, y);
          check_unit_bound(r2.r_te, y);
          return {y * (log_factor(r1.r_tm * r2.r_tm, y) + log_factor(r1.r_te * r2.r_te, y))};
        };
        auto q = integrate_tail_n<1>(integrand, ctx.zeta(l), opts.quad_rel_tol);
        TermSample<1> s;
        s.value[0] = q.value[0];
        s.abs_error = q.converged ? q.error[0] : std::numeric_limits<double>::infinity();
        return s;
      },
      sum);

  PlateResult out;
  out.free_energy = units::kBoltzmann * T / (8.0 * std::numbers::pi * a * a) * r.value[0];
  out.report = r.report;
  out.report.converged = r.report.converged && r.report.quad_error_estimate < opts.quad_rel_tol;
  return out;
}

ReflectionPair dilute_reflection(const DiluteGasWall& gas, const SpectralContext& ctx,
                                 std::size_t l, double y) {
  return fresnel(gas_response(gas, ctx, l), y);
}

ReflectionPair dilute_reflection_first_order(const DiluteGasWall& gas, const SpectralContext& ctx,
                                             std::size_t l, double y) {
  const AtomResponse r = response_at(gas.atom, ctx.frequency(l), ctx.T, gas.response);
  const double zeta = ctx.zeta(l);
  const double mixed = (r.alpha + r.beta) * zeta * zeta / (y * y);
  const double scale = std::numbers::pi * gas.number_density;
  return {scale * (2.0 * r.alpha - mixed), scale * (2.0 * r.beta - mixed)};
}

IntegratedFreeEnergy integrated_free_energy(const AtomModel& atom, const WallModel& wall, double a,
                                            double T, const SolverOptions& opts, double rel_tol) {
  using namespace units;
  (void)SpectralContext::make(a, T);  // validates a and T
  // tau_norm(z) = 4 pi z k_B T / (hbar c) reaches 30 at z_classical.
  const double z_classical = 30.0 * kHbar * kSpeedOfLight / (4.0 * std::numbers::pi * kBoltzmann * T);
  const double cutoff = std::max(20.0 * a, z_classical);

  auto fe = [&](double z) { return cp_free_energy(atom, wall, z, T, opts).fe_total; };

  // z = a / t maps [a, cutoff] onto [a / cutoff, 1]; FE z^2 stays bounded.
  const double t_min = a / cutoff;
  std::vector<double> breaks;
  const int pieces = 8;
  for (int i = 0; i <= pieces; ++i) {
    breaks.push_back(t_min * std::pow(1.0 / t_min, static_cast<double>(i) / pieces));
  }
  breaks.back() = 1.0;
  auto q = integrate_panels<1>(
      [&](double t) { return std::array<double, 1>{fe(a / t) * a / (t * t)}; }, breaks, rel_tol);

  // Power-law tail FE ~ z^-p beyond the cutoff; p -> 3 in the classical limit.
  const double f1 = fe(cutoff);
  const double f2 = fe(2.0 * cutoff);
  double p = 3.0;
  if (f1 != 0.0 && f2 / f1 > 0.0 && f2 / f1 < 1.0) p = std::log(f1 / f2) / std::log(2.0);
  IntegratedFreeEnergy out;
  out.cutoff = cutoff;
  out.tail = p > 1.0 ? f1 * cutoff / (p - 1.0) : 0.0;
  const double tail_spread = std::abs(out.tail - 0.5 * f1 * cutoff);
  out.value = q.value[0] + out.tail;
  out.error = q.error[0] + tail_spread + (q.converged ? 0.0 : std::abs(q.value[0]));
  out.evaluations = q.evaluations + 2;
  return out;
}

double extrapolate_to_zero(std::span<const double> x, std::span<const double> f) {
  if (x.size() != f.size() || x.empty()) {
    throw ContractViolation("extrapolate_to_zero: need matching, non-empty samples");
  }
  std::vector<double> p(f.begin(), f.end());
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      // Neville recurrence evaluated at 0.
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return p[0];
}

RarefactionReport rarefaction_check(const AtomModel& atom, const WallModel& wall, double a, double T,
                                    std::span<const double> number_densities,
                                    const SolverOptions& opts, double integral_rel_tol) {
  if (number_densities.size() < 2) {
    throw ContractViolation("rarefaction_check: need at least two number densities");
  }
  for (std::size_t i = 1; i < number_densities.size(); ++i) {
    if (!(number_densities[i] < number_densities[i - 1])) {
      throw DomainError("rarefaction_check: number densities must be strictly decreasing");
    }
  }

  RarefactionReport rep;
  rep.number_densities.assign(number_densities.begin(), number_densities.end());
  for (double n : number_densities) {
    const DiluteGasWall gas{atom, n, opts.response};
    validate(gas);
    const PlateResult plate = plate_free_energy(PlateSide{wall}, PlateSide{gas}, a, T, opts);
    if (!plate.report.converged) {
      throw ConvergenceError("rarefaction_check: plate free energy did not converge",
                             plate.report);
    }
    rep.per_atom.push_back(plate.free_energy / n);
  }

  // Differences below the solver noise floor carry no sign information.
  const double noise =
      10.0 * (opts.sum_rel_tol + opts.quad_rel_tol) * std::abs(rep.per_atom.front());
  int direction = 0;
  for (std::size_t i = 1; i < rep.per_atom.size(); ++i) {
    const double d = rep.per_atom[i] - rep.per_atom[i - 1];
    if (std::abs(d) <= noise) continue;
    const int s = d > 0.0 ? 1 : -1;
    if (direction != 0 && s != direction) rep.monotone = false;
    direction = s;
  }

  rep.extrapolated = extrapolate_to_zero(rep.number_densities, rep.per_atom);
  const IntegratedFreeEnergy integral =
      integrated_free_energy(atom, wall, a, T, opts, integral_rel_tol);
  rep.integrated = integral.value;
  rep.integrated_error = integral.error;
  rep.mismatch = std::abs(rep.extrapolated - rep.integrated) / std::abs(rep.integrated);

  std::ostringstream diag;
  diag.precision(6);
  if (!rep.monotone) {
    diag << "per-atom plate free energy is not monotone in N; extrapolation unreliable. ";
  }
  diag << "mismatch " << rep.mismatch << " (integral error estimate "
       << rep.integrated_error / std::abs(rep.integrated) << ")";
  rep.diagnostic = diag.str();
  return rep;
}

}  // namespace cpforce
