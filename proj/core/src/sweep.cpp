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

#include "cpforce/sweep.hpp"

#include <cmath>
#include <exception>

#include "cpforce/errors.hpp"
#include "cpforce/parallel.hpp"
#include "cpforce/units.hpp"

namespace cpforce {

const char* to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Full: return "full";
    case SweepMode::AlphaOnly: return "alpha_only";
    case SweepMode::StaticModel: return "static_model";
  }
  return "?";
}

const char* to_string(Spacing spacing) { return spacing == Spacing::Log ? "log" : "linear"; }

std::optional<SweepMode> parse_sweep_mode(std::string_view text) {
  if (text == "full") return SweepMode::Full;
  if (text == "alpha_only") return SweepMode::AlphaOnly;
  if (text == "static_model") return SweepMode::StaticModel;
  return std::nullopt;
}

std::optional<Spacing> parse_spacing(std::string_view text) {
  if (text == "log") return Spacing::Log;
  if (text == "linear") return Spacing::Linear;
  return std::nullopt;
}

ResponseOptions response_for(SweepMode mode) {
  switch (mode) {
    case SweepMode::Full: return {true, true};
    case SweepMode::AlphaOnly: return {true, false};
    case SweepMode::StaticModel: return {false, true};
  }
  return {};
}

void validate(const SweepSpec& spec) {
  try {
    validate(spec.atom);
    validate(spec.wall);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!(spec.a_min_m > 0.0) || !std::isfinite(spec.a_max_m)) {
    throw ConfigError("sweep: a_min must be > 0 and a_max finite");
  }
  if (!(spec.a_min_m < spec.a_max_m)) throw ConfigError("sweep: a_min must be < a_max");
  if (spec.points < 2) throw ConfigError("sweep: points must be >= 2");
  if (!(spec.temperature_k > 0.0) || !std::isfinite(spec.temperature_k)) {
    throw ConfigError("sweep: temperature must be > 0 K");
  }
  if (!(spec.solver.sum_rel_tol > 0.0) || !(spec.solver.quad_rel_tol > 0.0) ||
      spec.solver.l_max < 1) {
    throw ConfigError("sweep: tolerances must be > 0 and l_max >= 1");
  }
}

std::vector<double> sweep_separations_m(const SweepSpec& spec) {
  std::vector<double> a(spec.points);
  const double last = static_cast<double>(spec.points - 1);
  for (std::size_t i = 0; i < spec.points; ++i) {
    const double s = static_cast<double>(i) / last;
    if (spec.spacing == Spacing::Log) {
      a[i] = spec.a_min_m * std::pow(spec.a_max_m / spec.a_min_m, s);
    } else {
      a[i] = spec.a_min_m + s * (spec.a_max_m - spec.a_min_m);
    }
  }
  a.front() = spec.a_min_m;
  a.back() = spec.a_max_m;
  return a;
}

SweepRow make_row(double a_m, const ForceResult& result, SweepMode mode) {
  SweepRow row;
  row.a_m = a_m;
  row.f_total_N = units::dyn_to_newtons(result.f_total);
  row.f_alpha_N = units::dyn_to_newtons(result.f_alpha);
  row.f_beta_N = units::dyn_to_newtons(result.f_beta);
  row.a5_abs_f = std::pow(a_m, 5) * std::abs(row.f_total_N);
  row.deviation_pct =
      (mode == SweepMode::AlphaOnly || result.f_alpha == 0.0) ? 0.0 : deviation_percent(result);
  row.terms_l = result.report.terms_used;
  row.est_rel_err = result.report.quad_error_estimate + result.report.last_term_ratio;
  row.converged = result.report.converged;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers) {
  validate(spec);
  const std::vector<double> grid = sweep_separations_m(spec);
  SolverOptions opts = spec.solver;
  opts.response = response_for(spec.mode);
  opts.workers = 1;

  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const double a_cm = units::meters_to_cm(grid[i]);
    const ForceResult r = cp_force_unchecked(spec.atom, spec.wall, a_cm, spec.temperature_k, opts);
    rows[i] = make_row(grid[i], r, spec.mode);
  });
  return rows;
}

}  // namespace cpforce
