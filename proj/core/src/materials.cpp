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

#include "cpforce/materials.hpp"

#include <cmath>
#include <string>

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

namespace cpforce {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_xi(double xi, const char* where) {
  if (!(xi >= 0.0)) throw DomainError(std::string(where) + ": xi must be >= 0");
}

}  // namespace

void validate(const WallModel& wall) {
  std::visit(Overloaded{
                 [](const IdealMetal&) {},
                 [&](const Plasma& p) {
                   if (!(p.omega_p > 0.0) || !std::isfinite(p.omega_p))
                     throw DomainError("wall '" + wall.name + "': plasma frequency must be > 0");
                 },
                 [&](const ConstantEps& c) {
                   if (!(c.eps0 >= 1.0) || !std::isfinite(c.eps0))
                     throw DomainError("wall '" + wall.name + "': eps0 must be >= 1");
                 },
             },
             wall.eps);
  if (const auto* f = std::get_if<StaticFerromagnet>(&wall.mu)) {
    if (!(f->mu0 >= 1.0) || !std::isfinite(f->mu0))
      throw DomainError("wall '" + wall.name + "': mu0 must be >= 1");
  }
}

double permittivity_at(const PermittivityModel& model, double xi) {
  check_xi(xi, "permittivity_at");
  return std::visit(
      Overloaded{
          [](const IdealMetal&) -> double {
            throw ContractViolation("permittivity_at: ideal metal has no finite permittivity");
          },
          [&](const Plasma& p) -> double {
            if (xi == 0.0)
              throw DomainError("permittivity_at: plasma permittivity is infinite at xi = 0");
            const double r = p.omega_p / xi;
            return 1.0 + r * r;
          },
          [](const ConstantEps& c) -> double { return c.eps0; },
      },
      model);
}

double eps_xi_squared_deficit(const PermittivityModel& model, double xi) {
  check_xi(xi, "eps_xi_squared_deficit");
  return std::visit(
      Overloaded{
          [](const IdealMetal&) -> double {
            throw ContractViolation("eps_xi_squared_deficit: undefined for an ideal metal");
          },
          [](const Plasma& p) -> double { return p.omega_p * p.omega_p; },
          [&](const ConstantEps& c) -> double { return xi * xi * (c.eps0 - 1.0); },
      },
      model);
}

double permeability_at(const PermeabilityModel& model, std::size_t l) {
  return std::visit(Overloaded{
                        [](const NonMagnetic&) { return 1.0; },
                        [&](const StaticFerromagnet& f) {
                          if (f.mode == MuMode::AllFrequencies || l == 0) return f.mu0;
                          return 1.0;
                        },
                    },
                    model);
}

const char* to_string(MuMode mode) {
  return mode == MuMode::ZeroFrequencyOnly ? "zero-frequency-only" : "all-frequencies";
}

std::optional<MuMode> parse_mu_mode(std::string_view text) {
  if (text == "zero-frequency-only") return MuMode::ZeroFrequencyOnly;
  if (text == "all-frequencies") return MuMode::AllFrequencies;
  return std::nullopt;
}

namespace presets {

WallModel ideal_metal() { return {"ideal-metal", IdealMetal{}, NonMagnetic{}}; }

WallModel au_plasma() {
  return {"au-plasma", Plasma{units::ev_to_angular_frequency(kAuPlasmaEv)}, NonMagnetic{}};
}

WallModel fe_plasma(MuMode mode) {
  return {"fe-plasma", Plasma{units::ev_to_angular_frequency(kFePlasmaEv)},
          StaticFerromagnet{kFeMu0, mode}};
}

WallModel ferro_dielectric(MuMode mode) {
  return {"ferro-dielectric", ConstantEps{kFerroDielectricEps0},
          StaticFerromagnet{kFerroDielectricMu0, mode}};
}

WallModel vacuum() { return {"vacuum", ConstantEps{1.0}, NonMagnetic{}}; }

std::vector<std::string> wall_names() {
  return {"ideal-metal", "au-plasma", "fe-plasma", "ferro-dielectric"};
}

std::optional<WallModel> wall_by_name(std::string_view name) {
  if (name == "ideal-metal") return ideal_metal();
  if (name == "au-plasma") return au_plasma();
  if (name == "fe-plasma") return fe_plasma();
  if (name == "ferro-dielectric") return ferro_dielectric();
  return std::nullopt;
}

}  // namespace presets
}  // namespace cpforce
