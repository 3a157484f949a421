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

#include "cpforce/materials.hpp"

namespace cpforce {

struct ReflectionPair {
  double r_tm = 0.0;
  double r_te = 0.0;
};

/// Optical response of a half-space at one Matsubara frequency, stored in the
/// combinations the Fresnel formulas need so that no step divides by a zero
/// frequency or subtracts nearly equal numbers.
struct MediumResponse {
  bool ideal_metal = false;
  /// eps = infinity (plasma model at xi = 0); r_TM is then exactly 1.
  bool infinite_eps = false;
  double eps_minus_1 = 0.0;
  double mu = 1.0;
  double mu_minus_1 = 0.0;
  /// zeta^2 (eps mu - 1); finite even when eps is infinite.
  double delta = 0.0;
};

/// Response of `wall` at Matsubara index l with zeta = xi_l / omega_c.
MediumResponse wall_response(const WallModel& wall, double zeta, std::size_t l, double omega_c);

/// Response from eps - 1 and mu - 1 given directly (dilute media).
MediumResponse medium_from_susceptibilities(double eps_minus_1, double mu_minus_1, double zeta);

/// Fresnel coefficients in the dimensionless variables y = 2 a q and
/// zeta = 2 a xi / c. Assumes y >= zeta; the hot path does not check.
ReflectionPair fresnel(const MediumResponse& medium, double y);

/// Checked evaluation: throws DomainError for y < zeta, zeta < 0 or
/// omega_c <= 0, NumericalError for a non-finite result.
ReflectionPair reflection_at(const WallModel& wall, double zeta, double y, std::size_t l,
                             double omega_c);

}  // namespace cpforce
