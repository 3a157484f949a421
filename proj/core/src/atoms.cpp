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

#include "cpforce/atoms.hpp"

#include <cmath>
#include <string>

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

namespace cpforce {

void validate(const AtomModel& atom) {
  auto bad = [&](const char* what) {
    throw DomainError("atom '" + atom.name + "': " + what);
  };
  if (!(atom.alpha0 > 0.0) || !std::isfinite(atom.alpha0)) bad("alpha0 must be > 0");
  if (!(atom.omega_a > 0.0) || !std::isfinite(atom.omega_a)) bad("omega_a must be > 0");
  if (!(atom.g > 0.0) || !std::isfinite(atom.g)) bad("g must be > 0");
  if (!(atom.J >= 0.0) || !std::isfinite(atom.J)) bad("J must be >= 0");
  if (!(atom.tau_rel >= 0.0) || !std::isfinite(atom.tau_rel)) bad("tau_rel must be >= 0");
}

double polarizability_at(const AtomModel& atom, double xi) {
  if (!(xi >= 0.0)) throw DomainError("polarizability_at: xi must be >= 0");
  const double r = xi / atom.omega_a;
  return atom.alpha0 / (1.0 + r * r);
}

double static_susceptibility(const AtomModel& atom, double T) {
  if (!(T > 0.0)) throw DomainError("magnetic susceptibility: temperature must be > 0 K");
  const double mu = atom.g * units::kBohrMagneton;
  return mu * mu * atom.J * (atom.J + 1.0) / (3.0 * units::kBoltzmann * T);
}

double magnetic_susceptibility_at(const AtomModel& atom, double xi, double T) {
  if (!(xi >= 0.0)) throw DomainError("magnetic_susceptibility_at: xi must be >= 0");
  return static_susceptibility(atom, T) / (1.0 + atom.tau_rel * xi);
}

double static_ratio(const AtomModel& atom, double T) {
  return static_susceptibility(atom, T) / atom.alpha0;
}

AtomResponse response_at(const AtomModel& atom, double xi, double T, const ResponseOptions& opts) {
  AtomResponse r{};
  if (opts.frequency_dependent) {
    r.alpha = polarizability_at(atom, xi);
    r.beta = opts.include_magnetic ? magnetic_susceptibility_at(atom, xi, T) : 0.0;
  } else {
    r.alpha = atom.alpha0;
    r.beta = opts.include_magnetic ? static_susceptibility(atom, T) : 0.0;
  }
  return r;
}

namespace presets {

AtomModel hydrogen(double tau_rel) {
  return {"H", 6.67e-25, units::ev_to_angular_frequency(11.65), 1.0, 0.5, tau_rel};
}

AtomModel rubidium87(double tau_rel) {
  return {"Rb87", 4.73e-23, units::ev_to_angular_frequency(1.68), 1.0, 0.5, tau_rel};
}

std::vector<std::string> atom_names() { return {"H", "Rb87"}; }

std::optional<AtomModel> atom_by_name(std::string_view name) {
  if (name == "H") return hydrogen();
  if (name == "Rb87") return rubidium87();
  return std::nullopt;
}

}  // namespace presets
}  // namespace cpforce
