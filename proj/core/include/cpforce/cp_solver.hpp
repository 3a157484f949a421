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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cpforce/atoms.hpp"
#include "cpforce/convergence.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/spectral.hpp"

namespace cpforce {

struct SolverOptions {
  double sum_rel_tol = 1e-12;
  double quad_rel_tol = 1e-12;
  std::size_t l_max = 1'000'000;
  /// Threads used for Matsubara terms inside one call.
  unsigned workers = 1;
  ResponseOptions response{};
};

/// Force on the atom, dyn. Negative means attraction toward the wall.
struct ForceResult {
  double f_total = 0.0;
  double f_alpha = 0.0;
  double f_beta = 0.0;
  ConvergenceReport report;
  std::vector<std::string> warnings;
};

/// Atom-wall free energy, erg.
struct FreeEnergyResult {
  double fe_total = 0.0;
  double fe_alpha = 0.0;
  double fe_beta = 0.0;
  ConvergenceReport report;
  std::vector<std::string> warnings;
};

/// Casimir-Polder force from the Lifshitz-type Matsubara sum in the
/// dimensionless variables (zeta, y):
///
///   F = -(k_B T / 8 a^4) sum'_l int_{zeta_l}^inf y e^{-y}
///         { 2 y^2 [alpha r_TM + beta r_TE] - zeta_l^2 (alpha + beta)(r_TM + r_TE) } dy
///
/// The alpha- and beta-proportional pieces are integrated and summed as
/// separate components, so f_beta is never obtained by differencing.
/// `a` in cm, `T` in K. Throws ConvergenceError if the sum or a quadrature
/// misses its tolerance.
ForceResult cp_force(const AtomModel& atom, const WallModel& wall, double a, double T,
                     const SolverOptions& opts = {});

/// As cp_force, but returns a non-converged result instead of throwing.
ForceResult cp_force_unchecked(const AtomModel& atom, const WallModel& wall, double a, double T,
                               const SolverOptions& opts = {});

/// Free energy, same structure with one power of y fewer and prefactor
/// -(k_B T / 8 a^3). F = -dFE/da.
FreeEnergyResult cp_free_energy(const AtomModel& atom, const WallModel& wall, double a, double T,
                                const SolverOptions& opts = {});

/// Unprimed l-th Matsubara contribution {alpha part, beta part} to the force,
/// prefactor included (dyn). The l = 0 entry of the sum is half of this.
std::array<double, 2> cp_force_term(const AtomModel& atom, const WallModel& wall,
                                    const SpectralContext& ctx, std::size_t l,
                                    const SolverOptions& opts = {});

/// Bracket of the closed-form ideal-metal sum,
///   B(tau) = 3 + sum_{l>=1} (6 + 6 l tau + 3 (l tau)^2 + (l tau)^3) e^{-l tau}.
/// Below tau = 1e-3 the Laurent series 24/tau - tau^5/1260 + ... is used.
double ideal_metal_bracket(double tau);

/// Frequency-independent alpha0, beta0 near an ideal metal, closed form:
/// -(k_B T / 4 a^4)(alpha0 - beta0) B(tau_norm).
double ideal_metal_static_force(double alpha0, double beta0, double a, double T);

/// Same quantity by direct summation of the bracket series up to l_max (oracle).
double ideal_metal_series_force(double alpha0, double beta0, double a, double T,
                                std::size_t l_max = 10'000'000);

/// 100 (|F| - |F_alpha|) / |F_alpha|, taken from the alpha/beta split.
double deviation_percent(const ForceResult& r);

/// Computes cp_force with the magnetic response switched on and returns
/// deviation_percent. Throws DomainError if f_alpha vanishes.
double magnetic_deviation(const AtomModel& atom, const WallModel& wall, double a, double T,
                          const SolverOptions& opts = {});

/// Messages for inputs outside a in [0.5, 20] um or T in [0.5, 400] K.
std::vector<std::string> validity_warnings(double a, double T);

}  // namespace cpforce
