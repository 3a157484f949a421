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

#include <cstdint>
#include <string>

// Gaussian-CGS throughout the library: lengths in cm, angular frequencies in
// rad/s, temperatures in K, polarizabilities and susceptibilities in cm^3,
// energies in erg, forces in dyn. SI appears only at the CLI/sweep boundary
// through the conversion helpers at the bottom of this header.

namespace cpforce::units {

/// CODATA 2018 values in Gaussian-CGS.
struct PhysicalConstants {
  double hbar;        // erg s
  double c;           // cm / s
  double k_B;         // erg / K
  double mu_B;        // erg / G
  double erg_per_eV;  // erg / eV
  double e;           // statC
  double m_e;         // g
};

inline constexpr PhysicalConstants kConstants{
    .hbar = 1.054571817e-27,
    .c = 2.99792458e10,
    .k_B = 1.380649e-16,
    .mu_B = 9.2740100783e-21,
    .erg_per_eV = 1.602176634e-12,
    .e = 4.80320471e-10,
    .m_e = 9.1093837015e-28,
};

inline constexpr double kHbar = kConstants.hbar;
inline constexpr double kSpeedOfLight = kConstants.c;
inline constexpr double kBoltzmann = kConstants.k_B;
inline constexpr double kBohrMagneton = kConstants.mu_B;
inline constexpr double kErgPerEv = kConstants.erg_per_eV;

/// hbar * omega = e_ev  ->  omega in rad/s. Throws DomainError for e_ev < 0.
double ev_to_angular_frequency(double e_ev);
double angular_frequency_to_ev(double omega);

/// e hbar / (2 m_e c), recomputed from the table; used as a consistency check
/// against the tabulated mu_B.
double bohr_magneton_from_definition();

/// Human-readable provenance table of every compiled-in constant.
std::string constants_table();

/// FNV-1a 64 of constants_table(); recorded in JSON output metadata.
std::uint64_t constants_table_hash();

// SI <-> CGS, used exactly once at the I/O boundary.
inline constexpr double kCmPerMeter = 100.0;
inline constexpr double kDynPerNewton = 1.0e5;

constexpr double meters_to_cm(double m) { return m * kCmPerMeter; }
constexpr double cm_to_meters(double cm) { return cm / kCmPerMeter; }
constexpr double dyn_to_newtons(double dyn) { return dyn / kDynPerNewton; }
constexpr double newtons_to_dyn(double n) { return n * kDynPerNewton; }

}  // namespace cpforce::units
