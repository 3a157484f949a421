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

#include <cmath>

#include "check.hpp"
#include "cpforce/errors.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/reflection.hpp"
#include "cpforce/units.hpp"
#include "oracle_values.hpp"

using namespace cpforce;

namespace {

constexpr double kOmegaC1um = units::kSpeedOfLight / (2.0 * 1e-4);

// Textbook form in long double, used as an independent reference.
ReflectionPair textbook(long double eps, long double mu, long double zeta, long double y) {
  const long double k = std::sqrt(y * y + zeta * zeta * (eps * mu - 1.0L));
  return {static_cast<double>((eps * y - k) / (eps * y + k)),
          static_cast<double>((mu * y - k) / (mu * y + k))};
}

}  // namespace

TEST_SUITE("reflection") {

TEST_CASE("ideal metal") {
  for (double zeta : {0.0, 0.01, 3.0}) {
    for (double dy : {0.0, 0.5, 40.0}) {
      const auto r = reflection_at(presets::ideal_metal(), zeta, zeta + dy, 1, kOmegaC1um);
      CHECK(r.r_tm == 1.0);
      CHECK(r.r_te == -1.0);
    }
  }
}

TEST_CASE("ferro-dielectric at zero frequency") {
  for (double y : {0.0, 1e-6, 1.0, 50.0}) {
    const auto r = reflection_at(presets::ferro_dielectric(), 0.0, y, 0, kOmegaC1um);
    CHECK(r.r_tm == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.r_te == doctest::Approx(99.0 / 101.0).epsilon(1e-15));
  }
}

TEST_CASE("nonmagnetic dielectric has no static TE reflection") {
  const WallModel wall{"pe", ConstantEps{3.0}, NonMagnetic{}};
  for (double y : {0.0, 0.3, 7.0}) {
    CHECK(reflection_at(wall, 0.0, y, 0, kOmegaC1um).r_te == 0.0);
  }
}

TEST_CASE("plasma at zero frequency") {
  const auto au = presets::au_plasma();
  const double wpt = std::get<Plasma>(au.eps).omega_p / kOmegaC1um;
  const auto r = reflection_at(au, 0.0, wpt, 0, kOmegaC1um);
  CHECK(r.r_tm == 1.0);
  CHECK_REL(r.r_te, oracle::kAuTeAtOmegaP, 1e-14);
  CHECK_REL(r.r_te, -0.17157, 1e-4);
}

TEST_CASE("vacuum wall reflects nothing") {
  for (std::size_t l : {0u, 1u, 50u}) {
    const double zeta = 0.0055 * static_cast<double>(l);
    for (double dy : {0.0, 0.1, 10.0}) {
      const auto r = reflection_at(presets::vacuum(), zeta, zeta + dy, l, kOmegaC1um);
      CHECK(r.r_tm == 0.0);
      CHECK(r.r_te == 0.0);
    }
  }
}

TEST_CASE("agrees with the textbook form") {
  const double wp = units::ev_to_angular_frequency(9.0);
  for (double zeta : {0.0055, 0.3, 2.0, 30.0}) {
    const double xi = zeta * kOmegaC1um;
    const long double eps = 1.0L + (static_cast<long double>(wp) / xi) * (static_cast<long double>(wp) / xi);
    for (double dy : {0.0, 0.2, 5.0, 50.0}) {
      const double y = zeta + dy;
      const auto r = reflection_at(presets::au_plasma(), zeta, y, 1, kOmegaC1um);
      const auto ref = textbook(eps, 1.0L, zeta, y);
      CHECK(r.r_tm == doctest::Approx(ref.r_tm).epsilon(1e-13));
      CHECK(r.r_te == doctest::Approx(ref.r_te).epsilon(1e-13));
    }
  }
  for (double mu : {1.0, 100.0}) {
    const WallModel wall{"w", ConstantEps{3.0}, StaticFerromagnet{mu, MuMode::AllFrequencies}};
    for (double zeta : {0.01, 1.0, 10.0}) {
      for (double dy : {0.0, 1.0, 20.0}) {
        const auto r = reflection_at(wall, zeta, zeta + dy, 3, kOmegaC1um);
        const auto ref = textbook(3.0L, mu, zeta, zeta + dy);
        CHECK(r.r_tm == doctest::Approx(ref.r_tm).epsilon(1e-13));
        CHECK(r.r_te == doctest::Approx(ref.r_te).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("coefficients are bounded and signed") {
  const WallModel walls[] = {presets::au_plasma(), presets::fe_plasma(),
                             presets::ferro_dielectric(MuMode::AllFrequencies),
                             {"pe", ConstantEps{3.0}, NonMagnetic{}}};
  for (const auto& wall : walls) {
    const bool nonmagnetic = std::holds_alternative<NonMagnetic>(wall.mu);
    for (std::size_t l : {0u, 1u, 10u, 1000u}) {
      const double zeta = 0.00549 * static_cast<double>(l);
      for (double dy : {0.0, 1e-3, 0.7, 9.0, 60.0}) {
        const auto r = reflection_at(wall, zeta, zeta + dy, l, kOmegaC1um);
        CHECK(std::abs(r.r_tm) <= 1.0);
        CHECK(std::abs(r.r_te) <= 1.0);
        if (nonmagnetic) {
          CHECK(r.r_te <= 0.0);
          CHECK(r.r_tm >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("large eps approaches the ideal metal monotonically") {
  double prev_tm = 0.0, prev_te = 0.0;
  for (double eps : {10.0, 1e2, 1e4, 1e6, 1e8}) {
    const WallModel wall{"e", ConstantEps{eps}, NonMagnetic{}};
    const auto r = reflection_at(wall, 0.5, 1.5, 1, kOmegaC1um);
    CHECK(r.r_tm > prev_tm);
    CHECK(r.r_te < prev_te);
    prev_tm = r.r_tm;
    prev_te = r.r_te;
  }
  CHECK(prev_tm == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(prev_te == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("plasma continuity at small zeta") {
  const auto au = presets::au_plasma();
  for (double y : {1e-3, 0.5, 3.0, 30.0}) {
    const auto r0 = reflection_at(au, 0.0, y, 0, kOmegaC1um);
    const auto r1 = reflection_at(au, 1e-8, y, 1, kOmegaC1um);
    CHECK(std::abs(r0.r_tm - r1.r_tm) < 1e-6);
    CHECK(std::abs(r0.r_te - r1.r_te) < 1e-6);
  }
}

TEST_CASE("no cancellation for weak media") {
  // eps - 1 = 1e-12: the textbook form loses every digit of r_TM.
  const MediumResponse m = medium_from_susceptibilities(1e-12, 0.0, 0.5);
  const auto r = fresnel(m, 2.0);
  // Leading order: r_TM = (eps - 1)(2 y^2 - zeta^2) / (4 y^2).
  const double expected = 1e-12 * (2.0 * 4.0 - 0.25) / 16.0;
  CHECK_REL(r.r_tm, expected, 1e-9);
  CHECK(r.r_te < 0.0);
  CHECK_REL(r.r_te, -1e-12 * 0.25 / 16.0, 1e-9);
}

TEST_CASE("domain errors") {
  const auto au = presets::au_plasma();
  CHECK_THROWS_AS(reflection_at(au, -0.1, 1.0, 1, kOmegaC1um), DomainError);
  CHECK_THROWS_AS(reflection_at(au, 1.0, 0.5, 1, kOmegaC1um), DomainError);
  CHECK_THROWS_AS(reflection_at(au, 0.0, 1.0, 0, 0.0), DomainError);
}

}  // TEST_SUITE
