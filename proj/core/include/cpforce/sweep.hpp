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
#include <vector>

#include "cpforce/atoms.hpp"
#include "cpforce/cp_solver.hpp"
#include "cpforce/materials.hpp"

namespace cpforce {

enum class SweepMode {
  Full,         // frequency-dependent alpha and beta
  AlphaOnly,    // beta discarded
  StaticModel,  // alpha0 and beta(0; T) at every frequency
};

enum class Spacing { Linear, Log };

const char* to_string(SweepMode mode);
const char* to_string(Spacing spacing);
std::optional<SweepMode> parse_sweep_mode(std::string_view text);
std::optional<Spacing> parse_spacing(std::string_view text);

/// Response options implied by a sweep mode.
ResponseOptions response_for(SweepMode mode);

/// Separation sweep at fixed temperature. Separations are SI meters here;
/// conversion to cm happens inside run_sweep.
struct SweepSpec {
  AtomModel atom;
  WallModel wall;
  double temperature_k = 1.0;
  double a_min_m = 1e-6;
  double a_max_m = 1e-5;
  std::size_t points = 19;
  Spacing spacing = Spacing::Log;
  SweepMode mode = SweepMode::Full;
  /// Tolerances; `response` and `workers` are overridden by the sweep.
  SolverOptions solver{};
};

/// Throws ConfigError unless a_min < a_max, points >= 2, T > 0 and the
/// atom and wall pass their own validation.
void validate(const SweepSpec& spec);

/// Grid in meters, ascending.
std::vector<double> sweep_separations_m(const SweepSpec& spec);

struct SweepRow {
  double a_m = 0.0;
  double f_total_N = 0.0;
  double f_alpha_N = 0.0;
  double f_beta_N = 0.0;
  double a5_abs_f = 0.0;  // N m^5
  double deviation_pct = 0.0;
  std::size_t terms_l = 0;
  double est_rel_err = 0.0;
  bool converged = true;
};

/// Evaluates every grid point, dispatching points to `workers` threads.
/// Rows come back in ascending a regardless of scheduling. A non-converged
/// point yields a row with converged = false instead of an exception.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 1);

/// Converts one solver result at separation a_m into an SI row.
SweepRow make_row(double a_m, const ForceResult& result, SweepMode mode);

}  // namespace cpforce
