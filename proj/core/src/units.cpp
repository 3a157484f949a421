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

#include "cpforce/units.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "cpforce/errors.hpp"

namespace cpforce::units {

double ev_to_angular_frequency(double e_ev) {
  if (!(e_ev >= 0.0)) throw DomainError("ev_to_angular_frequency: energy must be >= 0 eV");
  return e_ev * kErgPerEv / kHbar;
}

double angular_frequency_to_ev(double omega) {
  if (!(omega >= 0.0)) throw DomainError("angular_frequency_to_ev: frequency must be >= 0");
  return omega * kHbar / kErgPerEv;
}

double bohr_magneton_from_definition() {
  return kConstants.e * kConstants.hbar / (2.0 * kConstants.m_e * kConstants.c);
}

std::string constants_table() {
  struct Row {
    const char* symbol;
    double value;
    const char* unit;
    const char* source;
  };
  const Row rows[] = {
      {"hbar", kConstants.hbar, "erg s", "CODATA 2018 (exact h / 2pi)"},
      {"c", kConstants.c, "cm/s", "SI exact"},
      {"k_B", kConstants.k_B, "erg/K", "SI exact"},
      {"mu_B", kConstants.mu_B, "erg/G", "CODATA 2018"},
      {"erg_per_eV", kConstants.erg_per_eV, "erg/eV", "SI exact"},
      {"e", kConstants.e, "statC", "CODATA 2018"},
      {"m_e", kConstants.m_e, "g", "CODATA 2018"},
  };
  std::string out;
  char line[160];
  for (const Row& r : rows) {
    std::snprintf(line, sizeof line, "%-10s %.10e %-7s %s\n", r.symbol, r.value, r.unit, r.source);
    out += line;
  }
  return out;
}

std::uint64_t constants_table_hash() {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : constants_table()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cpforce::units
