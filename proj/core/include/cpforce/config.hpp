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

#include <filesystem>
#include <string>
#include <string_view>

#include "cpforce/sweep.hpp"

// Versioned JSON sweep configuration. Layout (every key optional except
// schema_version; unknown keys are rejected):
//
//   {
//     "schema_version": 1,
//     "atom": "H" | {"name", "alpha0_cm3", "hbar_omega_a_ev", "g", "J", "tau_rel_s"},
//     "wall": "fe-plasma" | {"name", "eps_model": "ideal" | "plasma" | "constant",
//                            "omega_p_ev" | "eps0", "mu0", "mu_mode"},
//     "temp_k": 1.0, "a_min_m": 1e-6, "a_max_m": 1e-5, "points": 19,
//     "spacing": "log" | "linear", "mode": "full" | "alpha_only" | "static_model",
//     "tolerances": {"sum_rel_tol", "quad_rel_tol", "l_max"}
//   }

namespace cpforce {

inline constexpr int kConfigSchemaVersion = 1;

/// Defaults used when a key is absent: H atom, ideal-metal wall, 1 K,
/// 1-10 um, 19 log-spaced points, full mode, default tolerances.
SweepSpec default_sweep_spec();

/// Parses a configuration document on top of default_sweep_spec().
/// Throws ConfigError on syntax errors, schema mismatch or unknown keys.
SweepSpec parse_sweep_config(std::string_view json_text);
SweepSpec load_sweep_config(const std::filesystem::path& path);

/// Serializes a spec with atom and wall written inline, so the output parses
/// back to the same spec (frequencies round-trip through eV to within 1 ulp).
std::string to_config_json(const SweepSpec& spec, int indent = 2);

}  // namespace cpforce
