// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <functional>

namespace qam::thermo::detail {

/// Integral of f over [a, b] by double-exponential quadrature; tolerates
/// integrable endpoint singularities.
double integrate(const std::function<double(double)> &f, double a, double b,
                 double rel_tol = 1e-13);

/**
 * Integral over [a, end] of an integrand that peaks at `a` and decays
 * towards `end` with initial length scale `h0`. The range is cut into
 * segments that double in length, and integration stops once the remaining
 * tail, bounded by `peak_tail(x) * (end - x)`, is negligible.
 */
double integrate_decaying(const std::function<double(double)> &f,
                          const std::function<double(double)> &peak_tail,
                          double a, double end, double h0);

} // namespace qam::thermo::detail
