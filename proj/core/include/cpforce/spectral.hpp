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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "cpforce/convergence.hpp"
#include "cpforce/parallel.hpp"

namespace cpforce {

/// Matsubara grid and dimensionless scales for one (separation, temperature).
struct SpectralContext {
  double a = 0.0;          // separation, cm
  double T = 0.0;          // temperature, K
  double omega_c = 0.0;    // c / (2a), rad/s
  double xi_1 = 0.0;       // 2 pi k_B T / hbar, rad/s
  double zeta_1 = 0.0;     // xi_1 / omega_c
  double T_eff = 0.0;      // hbar c / (2 a k_B), K
  double tau_norm = 0.0;   // 2 pi T / T_eff

  /// Throws DomainError unless a > 0 and T > 0.
  static SpectralContext make(double a_cm, double T_K);

  double frequency(std::size_t l) const { return static_cast<double>(l) * xi_1; }
  double zeta(std::size_t l) const { return static_cast<double>(l) * zeta_1; }
};

/// xi_l = l * 2 pi k_B T / hbar.
inline double matsubara_frequency(const SpectralContext& ctx, std::size_t l) {
  return ctx.frequency(l);
}

struct SumOptions {
  double rel_tol = 1e-12;
  std::size_t l_max = 1'000'000;
  unsigned workers = 1;
  /// Consecutive below-threshold terms required before truncating.
  std::size_t quiet_terms = 3;
};

/// Neumaier-compensated accumulator. Summation order is the call order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// One Matsubara term: N components plus the absolute quadrature error that
/// went into computing them.
template <std::size_t N>
struct TermSample {
  std::array<double, N> value{};
  double abs_error = 0.0;
};

template <std::size_t N>
struct SumResult {
  std::array<double, N> value{};
  ConvergenceReport report;
};

namespace detail {

inline double relative_error(double abs_error, double magnitude, bool failed) {
  if (failed) return std::numeric_limits<double>::infinity();
  return magnitude > 0.0 ? abs_error / magnitude : 0.0;
}

}  // namespace detail

/// Primed Matsubara sum term(0)/2 + sum_{l>=1} term(l) over N components.
///
/// Truncates once, for `quiet_terms` consecutive l, every component satisfies
/// |term_c(l)| < rel_tol * |partial_c|; a component whose partial sum and
/// term are both zero counts as satisfied. Terms are evaluated in blocks
/// (concurrently when workers > 1) but always reduced in ascending l with
/// compensated accumulation, so the result does not depend on the worker
/// count. Reaching l_max returns a report with converged = false.
template <std::size_t N, class Term>
SumResult<N> primed_sum_n(Term&& term, const SumOptions& opts) {
  std::array<CompensatedSum, N> acc{};
  CompensatedSum err_acc;
  bool quad_failed = false;  // some term reported an infinite error
  SumResult<N> out;

  const std::size_t block = opts.workers > 1 ? 16 * static_cast<std::size_t>(opts.workers) : 1;
  std::vector<TermSample<N>> samples(block);

  std::size_t quiet = 0;
  double last_ratio = 0.0;
  std::size_t l = 0;
  while (l <= opts.l_max) {
    const std::size_t count = std::min(block, opts.l_max - l + 1);
    if (count == 1) {
      samples[0] = term(l);
    } else {
      parallel_for(count, opts.workers, [&](std::size_t i) { samples[i] = term(l + i); });
    }
    for (std::size_t i = 0; i < count; ++i, ++l) {
      const double weight = (l == 0) ? 0.5 : 1.0;
      const TermSample<N>& s = samples[i];
      for (std::size_t c = 0; c < N; ++c) acc[c].add(weight * s.value[c]);
      if (std::isfinite(s.abs_error)) {
        err_acc.add(weight * s.abs_error);
      } else {
        quad_failed = true;
      }

      bool below = true;
      double ratio = 0.0;
      for (std::size_t c = 0; c < N; ++c) {
        const double partial = std::abs(acc[c].value());
        const double t = std::abs(weight * s.value[c]);
        if (partial == 0.0) {
          if (t != 0.0) below = false;
          continue;
        }
        ratio = std::max(ratio, t / partial);
        if (!(t < opts.rel_tol * partial)) below = false;
      }
      last_ratio = ratio;
      quiet = below ? quiet + 1 : 0;
      if (l >= 1 && quiet >= opts.quiet_terms) {
        double magnitude = 0.0;
        for (std::size_t c = 0; c < N; ++c) {
          out.value[c] = acc[c].value();
          magnitude += std::abs(out.value[c]);
        }
        out.report.terms_used = l + 1;
        out.report.last_term_ratio = last_ratio;
        out.report.quad_error_estimate = detail::relative_error(err_acc.value(), magnitude, quad_failed);
        out.report.converged = !quad_failed;
        return out;
      }
    }
  }
  double magnitude = 0.0;
  for (std::size_t c = 0; c < N; ++c) {
    out.value[c] = acc[c].value();
    magnitude += std::abs(out.value[c]);
  }
  out.report.terms_used = l;
  out.report.last_term_ratio = last_ratio;
  out.report.quad_error_estimate = detail::relative_error(err_acc.value(), magnitude, quad_failed);
  out.report.converged = false;
  return out;
}

/// Scalar primed sum with the same truncation rule.
std::pair<double, ConvergenceReport> primed_sum(const std::function<double(std::size_t)>& term,
                                                double rel_tol, std::size_t l_max);

}  // namespace cpforce
