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

namespace cpforce {

struct ConvergenceReport {
  /// Number of Matsubara terms evaluated, l = 0 .. terms_used - 1.
  std::size_t terms_used = 0;
  /// |last term| / |partial sum| at the point the sum stopped.
  double last_term_ratio = 0.0;
  /// Accumulated quadrature error estimate relative to the sum magnitude.
  double quad_error_estimate = 0.0;
  bool converged = false;
};

}  // namespace cpforce
