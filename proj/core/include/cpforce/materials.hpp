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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cpforce {

// ---- permittivity ---------------------------------------------------------

/// Perfect reflector. Never evaluated as a finite epsilon; the reflection
/// code short-circuits it to r_TM = 1, r_TE = -1.
struct IdealMetal {};

/// eps(i xi) = 1 + omega_p^2 / xi^2, omega_p in rad/s.
struct Plasma {
  double omega_p = 0.0;
};

/// Frequency-independent eps >= 1.
struct ConstantEps {
  double eps0 = 1.0;
};

using PermittivityModel = std::variant<IdealMetal, Plasma, ConstantEps>;

// ---- permeability ---------------------------------------------------------

struct NonMagnetic {};

enum class MuMode {
  /// mu(i xi_l) = mu0 for l = 0 and 1 for l >= 1.
  ZeroFrequencyOnly,
  /// mu(i xi_l) = mu0 for every l.
  AllFrequencies,
};

struct StaticFerromagnet {
  double mu0 = 1.0;
  MuMode mode = MuMode::ZeroFrequencyOnly;
};

using PermeabilityModel = std::variant<NonMagnetic, StaticFerromagnet>;

// ---- wall -----------------------------------------------------------------

struct WallModel {
  std::string name;
  PermittivityModel eps;
  PermeabilityModel mu;

  bool is_ideal_metal() const { return std::holds_alternative<IdealMetal>(eps); }
};

/// Throws DomainError unless omega_p > 0, eps0 >= 1, mu0 >= 1.
void validate(const WallModel& wall);

/// eps(i xi) for Plasma (xi > 0) and ConstantEps. IdealMetal throws
/// ContractViolation; xi < 0 throws DomainError; Plasma at xi = 0 throws
/// DomainError because the value is infinite (use eps_xi_squared_deficit).
double permittivity_at(const PermittivityModel& model, double xi);

/// xi^2 (eps(i xi) - 1) in (rad/s)^2. Finite for the plasma model at xi = 0,
/// where it equals omega_p^2.
double eps_xi_squared_deficit(const PermittivityModel& model, double xi);

/// mu at Matsubara index l, following the StaticFerromagnet mode.
double permeability_at(const PermeabilityModel& model, std::size_t l);

const char* to_string(MuMode mode);
std::optional<MuMode> parse_mu_mode(std::string_view text);

namespace presets {

inline constexpr double kAuPlasmaEv = 9.0;
inline constexpr double kFePlasmaEv = 11.1;
inline constexpr double kFeMu0 = 1000.0;
inline constexpr double kFerroDielectricEps0 = 3.0;
inline constexpr double kFerroDielectricMu0 = 100.0;

WallModel ideal_metal();
WallModel au_plasma();
WallModel fe_plasma(MuMode mode = MuMode::ZeroFrequencyOnly);
WallModel ferro_dielectric(MuMode mode = MuMode::ZeroFrequencyOnly);
/// eps = mu = 1; both reflection coefficients vanish identically.
WallModel vacuum();

/// `ideal-metal`, `au-plasma`, `fe-plasma`, `ferro-dielectric`.
std::vector<std::string> wall_names();
std::optional<WallModel> wall_by_name(std::string_view name);

}  // namespace presets
}  // namespace cpforce
