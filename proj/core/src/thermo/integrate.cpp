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
#include "integrate.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace qam::thermo::detail {

namespace {

boost::math::quadrature::tanh_sinh<double> &integrator() {
    static thread_local boost::math::quadrature::tanh_sinh<double> instance;
    return instance;
}

} // namespace

double integrate(const std::function<double(double)> &f, double a, double b,
                 double rel_tol) {
    if (b <= a) {
        return 0.0;
    }
    return integrator().integrate(f, a, b, rel_tol);
}

double integrate_decaying(const std::function<double(double)> &f,
                          const std::function<double(double)> &peak_tail,
                          double a, double end, double h0) {
    double total = 0.0;
    double lo = a;
    double h = std::max(h0, (end - a) * 1e-12);
    while (lo < end) {
        const double hi = std::min(end, lo + h);
        total += integrate(f, lo, hi);
        lo = hi;
        h *= 2.0;
        if (lo < end && peak_tail(lo) * (end - lo) < 1e-17 * total) {
            break;
        }
    }
    return total;
}

} // namespace qam::thermo::detail
