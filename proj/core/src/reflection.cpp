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

#include "cpforce/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cpforce/errors.hpp"

namespace cpforce {

MediumResponse wall_response(const WallModel& wall, double zeta, std::size_t l, double omega_c) {
  MediumResponse m;
  if (wall.is_ideal_metal()) {
    m.ideal_metal = true;
    return m;
  }
  m.mu = permeability_at(wall.mu, l);
  m.mu_minus_1 = m.mu - 1.0;
  const double zeta2 = zeta * zeta;
  const double xi = zeta * omega_c;

  if (const auto* p = std::get_if<Plasma>(&wall.eps)) {
    // zeta^2 (eps - 1) = omega_p^2 / omega_c^2 at every xi, including 0.
    const double scaled = p->omega_p / omega_c;
    const double eps_part = scaled * scaled;
    if (xi == 0.0) {
      m.infinite_eps = true;
      m.eps_minus_1 = std::numeric_limits<double>::infinity();
    } else {
      m.eps_minus_1 = eps_xi_squared_deficit(wall.eps, xi) / (xi * xi);
    }
    m.delta = m.mu * eps_part + m.mu_minus_1 * zeta2;
  } else {
    const double eps0 = std::get<ConstantEps>(wall.eps).eps0;
    m.eps_minus_1 = eps0 - 1.0;
    m.delta = zeta2 * (m.mu * m.eps_minus_1 + m.mu_minus_1);
  }
  return m;
}

MediumResponse medium_from_susceptibilities(double eps_minus_1, double mu_minus_1, double zeta) {
  MediumResponse m;
  m.eps_minus_1 = eps_minus_1;
  m.mu_minus_1 = mu_minus_1;
  m.mu = 1.0 + mu_minus_1;
  // eps mu - 1 = (eps - 1) mu + (mu - 1)
  m.delta = zeta * zeta * (eps_minus_1 * m.mu + mu_minus_1);
  return m;
}

ReflectionPair fresnel(const MediumResponse& m, double y) {
  if (m.ideal_metal) return {1.0, -1.0};
  if (y == 0.0 && m.delta == 0.0) {
    // zeta = 0 limit at y -> 0: k = y exactly.
    ReflectionPair r;
    r.r_tm = m.infinite_eps ? 1.0 : m.eps_minus_1 / (m.eps_minus_1 + 2.0);
    r.r_te = m.mu_minus_1 / (m.mu + 1.0);
    return r;
  }
  if (y == 0.0) {
    // l = 0 with a finite deficit: k = sqrt(delta) > 0.
    return {m.infinite_eps ? 1.0 : -1.0, -1.0};
  }
  const double k = std::sqrt(y * y + m.delta);
  // y - k without cancellation.
  const double y_minus_k = -m.delta / (y + k);
  ReflectionPair r;
  r.r_te = (m.mu_minus_1 * y + y_minus_k) / (m.mu * y + k);
  if (m.infinite_eps) {
    r.r_tm = 1.0;
  } else {
    r.r_tm = (m.eps_minus_1 * y + y_minus_k) / ((1.0 + m.eps_minus_1) * y + k);
  }
  // |r| <= 1 holds exactly; rounding can overshoot by an ulp when y << k.
  r.r_tm = std::clamp(r.r_tm, -1.0, 1.0);
  r.r_te = std::clamp(r.r_te, -1.0, 1.0);
  return r;
}

ReflectionPair reflection_at(const WallModel& wall, double zeta, double y, std::size_t l,
                             double omega_c) {
  if (!(zeta >= 0.0)) throw DomainError("reflection_at: zeta must be >= 0");
  if (!(y >= zeta)) throw DomainError("reflection_at: y must be >= zeta");
  if (!(omega_c > 0.0)) throw DomainError("reflection_at: omega_c must be > 0");
  const ReflectionPair r = fresnel(wall_response(wall, zeta, l, omega_c), y);
  if (!std::isfinite(r.r_tm) || !std::isfinite(r.r_te)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reflection_at: non-finite coefficient for wall '" << wall.name << "' at zeta = " << zeta
        << ", y = " << y << ", l = " << l;
    throw NumericalError(msg.str());
  }
  return r;
}

}  // namespace cpforce
