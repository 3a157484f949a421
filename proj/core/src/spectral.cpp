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

#include "cpforce/spectral.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "cpforce/errors.hpp"
#include "cpforce/quadrature.hpp"
#include "cpforce/units.hpp"

namespace cpforce {

SpectralContext SpectralContext::make(double a_cm, double T_K) {
  if (!(a_cm > 0.0) || !std::isfinite(a_cm)) throw DomainError("separation must be > 0");
  if (!(T_K > 0.0) || !std::isfinite(T_K)) throw DomainError("temperature must be > 0 K");
  using namespace units;
  SpectralContext ctx;
  ctx.a = a_cm;
  ctx.T = T_K;
  ctx.omega_c = kSpeedOfLight / (2.0 * a_cm);
  ctx.xi_1 = 2.0 * std::numbers::pi * kBoltzmann * T_K / kHbar;
  ctx.zeta_1 = ctx.xi_1 / ctx.omega_c;
  ctx.T_eff = kHbar * kSpeedOfLight / (2.0 * a_cm * kBoltzmann);
  ctx.tau_norm = 2.0 * std::numbers::pi * T_K / ctx.T_eff;
  return ctx;
}

std::pair<double, ConvergenceReport> primed_sum(const std::function<double(std::size_t)>& term,
                                                double rel_tol, std::size_t l_max) {
  if (!(rel_tol > 0.0)) throw DomainError("primed_sum: rel_tol must be > 0");
  SumOptions opts;
  opts.rel_tol = rel_tol;
  opts.l_max = l_max;
  auto r = primed_sum_n<1>(
      [&](std::size_t l) {
        TermSample<1> s;
        s.value[0] = term(l);
        return s;
      },
      opts);
  return {r.value[0], r.report};
}

QuadResult integrate_tail(const std::function<double(double)>& integrand, double lower,
                          double rel_tol) {
  auto r = integrate_tail_n<1>([&](double y) { return std::array<double, 1>{integrand(y)}; },
                               lower, rel_tol);
  return {r.value[0], r.error[0], r.converged};
}

QuadResult integrate_interval(const std::function<double(double)>& integrand, double lo, double hi,
                              double rel_tol) {
  auto r = integrate_panels<1>([&](double y) { return std::array<double, 1>{integrand(y)}; },
                               std::vector<double>{lo, hi}, rel_tol);
  return {r.value[0], r.error[0], r.converged};
}

}  // namespace cpforce
