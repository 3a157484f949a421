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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpforce {

/// Single-oscillator polarizable atom with a permanent magnetic moment.
struct AtomModel {
  std::string name;
  double alpha0 = 0.0;   // static polarizability, cm^3
  double omega_a = 0.0;  // oscillator eigenfrequency, rad/s
  double g = 1.0;        // Lande factor
  double J = 0.5;        // total angular momentum quantum number
  double tau_rel = 0.0;  // paramagnetic relaxation time, s
};

/// How the atomic response functions are evaluated by the solvers.
struct ResponseOptions {
  /// false: alpha(i xi) = alpha0 and beta(i xi) = beta(0; T) for all xi.
  bool frequency_dependent = true;
  /// false: beta discarded entirely (pure electric polarizability).
  bool include_magnetic = true;
};

/// Throws DomainError unless alpha0 > 0, omega_a > 0, g > 0, J >= 0, tau_rel >= 0.
void validate(const AtomModel& atom);

/// alpha0 / (1 + xi^2 / omega_a^2), cm^3.
double polarizability_at(const AtomModel& atom, double xi);

/// g^2 mu_B^2 J (J + 1) / (3 k_B T) / (1 + tau_rel xi), cm^3. T <= 0 throws.
double magnetic_susceptibility_at(const AtomModel& atom, double xi, double T);

/// beta(0; T).
double static_susceptibility(const AtomModel& atom, double T);

/// beta(0; T) / alpha(0).
double static_ratio(const AtomModel& atom, double T);

/// alpha and beta at one frequency under the chosen response options.
struct AtomResponse {
  double alpha;
  double beta;
};
AtomResponse response_at(const AtomModel& atom, double xi, double T, const ResponseOptions& opts);

namespace presets {

inline constexpr double kDefaultTauRel = 1.0e-8;

AtomModel hydrogen(double tau_rel = kDefaultTauRel);
AtomModel rubidium87(double tau_rel = kDefaultTauRel);

/// `H`, `Rb87`.
std::vector<std::string> atom_names();
std::optional<AtomModel> atom_by_name(std::string_view name);

}  // namespace presets
}  // namespace cpforce
