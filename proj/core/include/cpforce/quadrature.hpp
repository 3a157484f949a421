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

// Adaptive Gauss-Kronrod (10-point Gauss / 21-point Kronrod nested pair,
// QUADPACK qk21 constants and error heuristic) over finite intervals, plus a
// semi-infinite driver for integrands with an exp(-y) * polynomial envelope.
// Integrands may be vector valued (std::array<double, N>); all components
// share the sample points and each component must meet its own tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "cpforce/errors.hpp"

namespace cpforce {

template <std::size_t N>
struct QuadratureResult {
  std::array<double, N> value{};
  std::array<double, N> error{};
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980108487, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights at the odd Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t N>
struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  std::array<double, N> value{};
  std::array<double, N> error{};
  std::array<double, N> abs_value{};
};

template <std::size_t N, class F>
std::array<double, N> sample(F& f, double x) {
  std::array<double, N> v = f(x);
  for (double c : v) {
    if (!std::isfinite(c)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "non-finite integrand sample at y = " << x;
      throw NumericalError(msg.str());
    }
  }
  return v;
}

template <std::size_t N, class F>
Panel<N> kronrod21(F& f, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<std::array<double, N>, 21> fx;
  fx[0] = sample<N>(f, center);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    fx[1 + 2 * j] = sample<N>(f, center - dx);
    fx[2 + 2 * j] = sample<N>(f, center + dx);
  }

  Panel<N> p;
  p.lo = lo;
  p.hi = hi;
  for (std::size_t c = 0; c < N; ++c) {
    const double fc = fx[0][c];
    double kron = kKronrodWeights[10] * fc;
    double gauss = 0.0;
    double resabs = std::abs(kron);
    for (std::size_t j = 0; j < 10; ++j) {
      const double s = fx[1 + 2 * j][c] + fx[2 + 2 * j][c];
      kron += kKronrodWeights[j] * s;
      resabs += kKronrodWeights[j] * (std::abs(fx[1 + 2 * j][c]) + std::abs(fx[2 + 2 * j][c]));
      if (j % 2 == 1) gauss += kGaussWeights[j / 2] * s;
    }
    const double mean = 0.5 * kron;
    double resasc = kKronrodWeights[10] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 10; ++j) {
      resasc += kKronrodWeights[j] *
                (std::abs(fx[1 + 2 * j][c] - mean) + std::abs(fx[2 + 2 * j][c] - mean));
    }
    kron *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs(kron - gauss * half);
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
      err = std::max(50.0 * eps * resabs, err);
    }
    p.value[c] = kron;
    p.error[c] = err;
    p.abs_value[c] = resabs;
  }
  return p;
}

inline double tolerance_for(double rel_tol, double value, double abs_value) {
  // Roundoff floor: relative accuracy cannot beat a few ulps of the
  // integral of |f|.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  return std::max(rel_tol * std::abs(value), 100.0 * eps * abs_value);
}

}  // namespace detail

/// Adaptive integration of a vector-valued f over the union of the panels
/// delimited by `breakpoints` (ascending, at least two entries). Bisects the
/// panel with the worst relative error until every component satisfies
/// error <= rel_tol * |value| (or the roundoff floor), or max_panels is hit.
template <std::size_t N, class F>
QuadratureResult<N> integrate_panels(F&& f, const std::vector<double>& breakpoints, double rel_tol,
                                     std::size_t max_panels = 400) {
  if (breakpoints.size() < 2) throw ContractViolation("integrate_panels: need two breakpoints");
  if (!(rel_tol > 0.0)) throw DomainError("integrate_panels: rel_tol must be positive");

  std::vector<detail::Panel<N>> panels;
  panels.reserve(max_panels + breakpoints.size());
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) {
      panels.push_back(detail::kronrod21<N>(f, breakpoints[i], breakpoints[i + 1]));
    }
  }

  QuadratureResult<N> out;
  out.evaluations = 21 * panels.size();
  for (;;) {
    std::array<double, N> value{}, error{}, abs_value{};
    for (const auto& p : panels) {
      for (std::size_t c = 0; c < N; ++c) {
        value[c] += p.value[c];
        error[c] += p.error[c];
        abs_value[c] += p.abs_value[c];
      }
    }
    // Worst component relative to its tolerance.
    double worst_ratio = 0.0;
    std::size_t worst_component = 0;
    for (std::size_t c = 0; c < N; ++c) {
      const double tol = detail::tolerance_for(rel_tol, value[c], abs_value[c]);
      const double ratio = tol > 0.0 ? error[c] / tol : (error[c] > 0.0 ? HUGE_VAL : 0.0);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst_component = c;
      }
    }
    out.value = value;
    out.error = error;
    if (worst_ratio <= 1.0) {
      out.converged = true;
      return out;
    }
    if (panels.size() >= max_panels) {
      out.converged = false;
      return out;
    }
    auto it = std::max_element(panels.begin(), panels.end(), [&](const auto& x, const auto& y) {
      return x.error[worst_component] < y.error[worst_component];
    });
    const double lo = it->lo;
    const double hi = it->hi;
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) {
      out.converged = false;
      return out;
    }
    *it = detail::kronrod21<N>(f, lo, mid);
    panels.push_back(detail::kronrod21<N>(f, mid, hi));
    out.evaluations += 42;
  }
}

/// Integral over [lower, infinity) of an integrand bounded by
/// exp(-y) * (polynomial of degree <= 4). Integrates [lower, lower + 60]
/// adaptively and adds the analytic tail bound |f(U)| U / (U - 4) to the
/// error estimate, extending the cut U while that bound exceeds a tenth of
/// the tolerance.
template <std::size_t N, class F>
QuadratureResult<N> integrate_tail_n(F&& f, double lower, double rel_tol) {
  if (!(lower >= 0.0)) throw DomainError("integrate_tail: lower limit must be >= 0");
  static constexpr std::array<double, 7> kOffsets = {0.0, 2.0, 5.0, 10.0, 20.0, 35.0, 60.0};
  std::vector<double> breaks;
  for (double o : kOffsets) breaks.push_back(lower + o);

  QuadratureResult<N> total = integrate_panels<N>(f, breaks, 0.5 * rel_tol);
  double cut = breaks.back();
  constexpr double kEnvelopeDegree = 4.0;
  for (int extension = 0;; ++extension) {
    const std::array<double, N> at_cut = detail::sample<N>(f, cut);
    bool ok = true;
    std::array<double, N> tail{};
    for (std::size_t c = 0; c < N; ++c) {
      tail[c] = std::abs(at_cut[c]) * cut / (cut - kEnvelopeDegree);
      if (tail[c] > 0.1 * rel_tol * std::abs(total.value[c])) ok = false;
    }
    if (ok || extension >= 8) {
      for (std::size_t c = 0; c < N; ++c) {
        total.error[c] += tail[c];
        if (tail[c] > 0.5 * rel_tol * std::abs(total.value[c]) && tail[c] > 0.0) total.converged = false;
      }
      total.evaluations += 1;
      return total;
    }
    const double next = cut + 30.0;
    QuadratureResult<N> extra = integrate_panels<N>(f, {cut, next}, 0.5 * rel_tol);
    for (std::size_t c = 0; c < N; ++c) {
      total.value[c] += extra.value[c];
      total.error[c] += extra.error[c];
    }
    total.converged = total.converged && extra.converged;
    total.evaluations += extra.evaluations + 1;
    cut = next;
  }
}

/// Scalar convenience wrapper over integrate_tail_n.
QuadResult integrate_tail(const std::function<double(double)>& integrand, double lower,
                          double rel_tol);

/// Scalar adaptive integral over [lo, hi].
QuadResult integrate_interval(const std::function<double(double)>& integrand, double lo,
                              double hi, double rel_tol);

}  // namespace cpforce
