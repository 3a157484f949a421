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

#include <string>
#include <vector>

namespace cpforce::verify {

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured quantity, usually a relative error
  double threshold = 0.0;  // pass if value < threshold
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  /// Machine-readable form: {"suite", "passed", "seconds", "checks": [...]}.
  std::string to_json() const;
};

/// Generic pipeline vs series vs closed form for static alpha0, beta0 near an
/// ideal metal at (1 K; 1, 5, 10 um) and (300 K; 1 um), pairwise to 1e-9.
Report oracle();

/// Zero-temperature limit at tau_norm = 1e-4 (1e-3 relative) and the
/// classical limit for tau_norm >= 30 (1e-6 relative).
Report limits();

/// Plate-dilution free energy extrapolated to N = 0 against the integrated
/// atom-wall free energy at (1 um, 1 K) for H near the ideal metal and the
/// ferromagnetic dielectric, to 1e-4. The full run adds 5 um and a longer
/// density ladder.
Report rarefaction(bool quick);

}  // namespace cpforce::verify
