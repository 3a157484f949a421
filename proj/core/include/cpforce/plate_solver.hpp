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

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cpforce/atoms.hpp"
#include "cpforce/cp_solver.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/reflection.hpp"
#include "cpforce/spectral.hpp"

namespace cpforce {

/// Rarefied gas of atoms filling a half-space: eps = 1 + 4 pi N alpha,
/// mu = 1 + 4 pi N beta, kept exact rather than expanded in N.
struct DiluteGasWall {
  AtomModel atom;
  double number_density = 0.0;  // cm^-3
  ResponseOptions response{};
};

/// Throws DomainError unless N > 0 and 4 pi N alpha(0) < 1e-3.
void validate(const DiluteGasWall& gas);

using PlateSide = std::variant<WallModel, DiluteGasWall>;

struct PlateResult {
  double free_energy = 0.0;  // erg / cm^2
  ConvergenceReport report;
};

/// Lifshitz free energy per unit area between two half-spaces,
///   (k_B T / 8 pi a^2) sum'_l int_{zeta_l}^inf y
///       { ln(1 - r_TM^1 r_TM^2 e^{-y}) + ln(1 - r_TE^1 r_TE^2 e^{-y}) } dy.
/// `opts.response` is ignored; a dilute side carries its own.
PlateResult plate_free_energy(const PlateSide& side1, const PlateSide& side2, double a, double T,
                              const SolverOptions& opts = {});

/// Exact reflection coefficients of the dilute gas at (l, y).
ReflectionPair dilute_reflection(const DiluteGasWall& gas, const SpectralContext& ctx,
                                 std::size_t l, double y);

/// First-order-in-N reflection coefficients,
///   r_TM = pi N [2 alpha - (alpha + beta) zeta^2 / y^2],
///   r_TE = pi N [2 beta  - (alpha + beta) zeta^2 / y^2].
ReflectionPair dilute_reflection_first_order(const DiluteGasWall& gas, const SpectralContext& ctx,
                                             std::size_t l, double y);

struct IntegratedFreeEnergy {
  double value = 0.0;       // erg cm
  double error = 0.0;       // absolute estimate, quadrature plus tail
  double tail = 0.0;        // contribution beyond `cutoff`
  double cutoff = 0.0;      // cm
  std::size_t evaluations = 0;
};

/// int_a^inf FE(z) dz for the atom-wall free energy. [a, Z] is integrated
/// adaptively in t = a / z; beyond Z = max(20 a, z at which tau_norm = 30) the
/// classical regime is reached and the remainder comes from a power-law fit
/// FE ~ z^-p through FE(Z) and FE(2Z).
IntegratedFreeEnergy integrated_free_energy(const AtomModel& atom, const WallModel& wall, double a,
                                            double T, const SolverOptions& opts,
                                            double rel_tol = 1e-9);

struct RarefactionReport {
  std::vector<double> number_densities;  // cm^-3, as given
  std::vector<double> per_atom;          // plate free energy / N, erg cm
  double extrapolated = 0.0;             // N -> 0 Richardson limit
  double integrated = 0.0;               // int_a^inf FE dz
  double integrated_error = 0.0;
  double mismatch = 0.0;                 // |extrapolated - integrated| / |integrated|
  bool monotone = true;
  std::string diagnostic;
};

/// Re-derives the atom-wall free energy from the plate-plate formula: the
/// second plate is a dilute gas of `atom`, the per-atom free energy is
/// extrapolated polynomially to N = 0 and compared with the integral of
/// cp_free_energy over the atom position. `number_densities` must be strictly
/// decreasing and each satisfy the dilution guard.
RarefactionReport rarefaction_check(const AtomModel& atom, const WallModel& wall, double a, double T,
                                    std::span<const double> number_densities,
                                    const SolverOptions& opts = {}, double integral_rel_tol = 1e-9);

/// Polynomial (Neville) extrapolation of samples (x_i, f_i) to x = 0.
double extrapolate_to_zero(std::span<const double> x, std::span<const double> f);

}  // namespace cpforce
